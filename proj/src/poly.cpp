#include "ramseycert/poly.hpp"

#include <cctype>
#include <sstream>

namespace ramsey {

namespace {

// Degrees beyond this are almost certainly typos and would allocate
// proportional memory, so the parsers refuse them.
constexpr unsigned long kMaxParsedDegree = 4096;

void normalize(std::vector<Int>& coeffs) {
  if (coeffs.empty()) throw ParseError("polynomial needs at least one coefficient");
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
}

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Recursive-descent parser for sums of terms, each term a '*'-product of
// integer literals and powers of z:  expr := [+|-] term ((+|-) term)*,
// term := factor (* factor)*, factor := INT | z [^ INT].
class ExpressionParser {
 public:
  explicit ExpressionParser(const std::string& text) : text_(text) {}

  std::vector<Int> run() {
    std::vector<Int> coeffs(1, Int(0));
    int sign = read_sign(+1);
    for (;;) {
      auto [coeff, exp] = term();
      if (exp > kMaxParsedDegree)
        throw ParseError("polynomial degree too large: z^" + std::to_string(exp));
      if (coeffs.size() <= exp) coeffs.resize(exp + 1, Int(0));
      coeffs[exp] += sign * coeff;
      skip_space();
      if (done()) break;
      if (peek() == '+' || peek() == '-') {
        sign = read_sign(+1);
      } else {
        throw ParseError(std::string("unexpected character '") + peek() +
                         "' in polynomial expression");
      }
    }
    return coeffs;
  }

 private:
  std::pair<Int, unsigned long> term() {
    Int coeff = 1;
    unsigned long exp = 0;
    for (;;) {
      auto [c, e] = factor();
      coeff *= c;
      exp += e;
      skip_space();
      if (!done() && peek() == '*') {
        ++pos_;
        continue;
      }
      return {coeff, exp};
    }
  }

  std::pair<Int, unsigned long> factor() {
    skip_space();
    if (done()) throw ParseError("polynomial expression ends unexpectedly");
    char c = peek();
    if (c == 'z' || c == 'Z') {
      ++pos_;
      skip_space();
      unsigned long e = 1;
      if (!done() && peek() == '^') {
        ++pos_;
        e = to_ulong(integer());
        if (e > kMaxParsedDegree)
          throw ParseError("polynomial degree too large: z^" + std::to_string(e));
      }
      return {Int(1), e};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return {integer(), 0};
    throw ParseError(std::string("unexpected character '") + c +
                     "' in polynomial expression");
  }

  Int integer() {
    skip_space();
    std::string digits;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek())))
      digits += text_[pos_++];
    if (digits.empty())
      throw ParseError("expected an integer in polynomial expression");
    return Int(digits);
  }

  int read_sign(int initial) {
    skip_space();
    int sign = initial;
    while (!done() && (peek() == '+' || peek() == '-')) {
      if (peek() == '-') sign = -sign;
      ++pos_;
      skip_space();
    }
    return sign;
  }

  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  normalize(coeffs_);
}

IntPolynomial IntPolynomial::monomial(const Int& c, unsigned long e) {
  std::vector<Int> coeffs(e + 1, Int(0));
  coeffs[e] = c;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::parse(const std::string& text) {
  if (text.find('z') != std::string::npos || text.find('Z') != std::string::npos)
    return from_expression(text);
  return from_coefficients(text);
}

IntPolynomial IntPolynomial::from_coefficients(const std::string& csv) {
  std::vector<Int> coeffs;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) {
    item = trimmed(item);
    if (item.empty()) throw ParseError("empty coefficient in list: \"" + csv + "\"");
    try {
      coeffs.emplace_back(item);
    } catch (const std::invalid_argument&) {
      throw ParseError("bad coefficient \"" + item + "\"");
    }
    if (coeffs.size() > kMaxParsedDegree)
      throw ParseError("too many coefficients");
  }
  if (coeffs.empty()) throw ParseError("empty coefficient list");
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::from_expression(const std::string& expr) {
  return IntPolynomial(ExpressionParser(expr).run());
}

Int IntPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Int(0);
}

Int IntPolynomial::operator()(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Int IntPolynomial::eval_mod(const Int& x, const Int& m) const {
  if (m < 1) throw PreconditionError("eval_mod: modulus must be positive");
  Int xr = mod_floor(x, m);
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = mod_floor(acc * xr + *it, m);
  return acc;
}

std::string IntPolynomial::coefficient_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].get_str();
  }
  return out;
}

std::string IntPolynomial::pretty() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
    const Int& c = coeffs_[idx];
    if (c == 0) continue;
    Int mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? '-' : '+';
    }
    bool unit = mag == 1;
    if (idx == 0 || !unit) out += mag.get_str();
    if (idx > 0) {
      if (!unit) out += '*';
      out += 'z';
      if (idx > 1) out += "^" + std::to_string(idx);
    }
  }
  return out;
}

EquationSpec::EquationSpec(Int a_, Int b_, IntPolynomial p_)
    : a(std::move(a_)), b(std::move(b_)), p(std::move(p_)) {
  if (a < 1 || b < 1)
    throw PreconditionError("EquationSpec: coefficients a and b must be positive");
}

Int difference_quotient(const EquationSpec& eq, const Int& d, const Int& k) {
  if (d < 1) throw PreconditionError("difference_quotient: d must be positive");
  Int diff = eq.p(k + d) - eq.p(k);
  if (!divisible(diff, eq.a))
    throw PreconditionError("difference_quotient: a = " + to_string(eq.a) +
                            " does not divide p(k+d)-p(k) = " + to_string(diff) +
                            " at k = " + to_string(k));
  return diff / eq.a;
}

EquationSpec scale_reduce(const Int& a, const Int& b, const Int& c,
                          const IntPolynomial& p) {
  if (a < 1 || b < 1 || c < 1)
    throw PreconditionError("scale_reduce: a, b, c must be positive");
  const Int a1 = p.coefficient(1);
  const Int a0 = p.coefficient(0);
  if (!divisible(a1, c))
    throw PreconditionError("scale_reduce: c = " + to_string(c) +
                            " does not divide the linear coefficient " + to_string(a1));
  if (!divisible(a0, c * c))
    throw PreconditionError("scale_reduce: c^2 = " + to_string(c * c) +
                            " does not divide the constant term " + to_string(a0));
  // q_i = p_i * c^{i-2}: constant and linear terms divide, higher ones scale.
  std::vector<Int> q(p.degree() + 1, Int(0));
  q[0] = a0 / (c * c);
  if (p.degree() >= 1) q[1] = a1 / c;
  Int cpow = 1;
  for (std::size_t i = 2; i <= p.degree(); ++i) {
    q[i] = p.coefficient(i) * cpow;
    cpow *= c;
  }
  return EquationSpec(a, b, IntPolynomial(std::move(q)));
}

Triple lift_scaled_solution(const Int& c, const Triple& sol) {
  if (c < 1) throw PreconditionError("lift_scaled_solution: c must be positive");
  return {c * sol.x, c * sol.y, c * sol.z};
}

}  // namespace ramsey

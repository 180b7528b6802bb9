#include "wpp/numeric.hpp"

#include "wpp/error.hpp"

#include <stdexcept>

namespace wpp {

std::int64_t to_i64(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
  return v.get_si();
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int mod_pos(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (r < 0) r += abs(m);
  return r;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("bad integer");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer: " + std::string(s));
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Int(digits, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return make_rational(num, den);
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPairwiseCoprime: return "NotPairwiseCoprime";
    case ErrorCode::DegenerateWeight: return "DegenerateWeight";
    case ErrorCode::InvalidFraction: return "InvalidFraction";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::Unclassified: return "Unclassified";
    case ErrorCode::NotAdjacent: return "NotAdjacent";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::NotBlowdownable: return "NotBlowdownable";
    case ErrorCode::MissingClasses: return "MissingClasses";
    case ErrorCode::NotAtSignChange: return "NotAtSignChange";
    case ErrorCode::ChopsOverlap: return "ChopsOverlap";
    case ErrorCode::NotDelzantNeighborhood: return "NotDelzantNeighborhood";
    case ErrorCode::NoMinusOneEdge: return "NoMinusOneEdge";
    case ErrorCode::LemmaViolated: return "LemmaViolated";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::Precondition: return "Precondition";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

bool Error::is_invariant_violation() const noexcept {
  return code_ == ErrorCode::LemmaViolated || code_ == ErrorCode::NoMinusOneEdge;
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace wpp

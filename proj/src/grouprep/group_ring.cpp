#include <algorithm>
#include <cctype>

#include "sigma8/grouprep.hpp"

namespace sigma8 {

GroupWord::GroupWord(std::vector<Letter> letters, bool abelian) {
  if (abelian)
    std::stable_sort(letters.begin(), letters.end());
  for (const auto& l : letters) {
    if (l.second != 1 && l.second != -1)
      throw Error(ErrorKind::InvariantError, "word letters must have exponent ±1");
    if (!letters_.empty() && letters_.back().first == l.first && letters_.back().second == -l.second)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

GroupWord GroupWord::inverse(bool abelian) const {
  std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
  for (auto& l : inv) l.second = -l.second;
  return GroupWord(std::move(inv), abelian);
}

GroupWord multiply(const GroupWord& a, const GroupWord& b, bool abelian) {
  std::vector<GroupWord::Letter> all = a.letters_;
  all.insert(all.end(), b.letters_.begin(), b.letters_.end());
  return GroupWord(std::move(all), abelian);
}

GroupRingElement::GroupRingElement(const Integer& c) {
  if (sgn(c) != 0) terms_.emplace(GroupWord(), c);
}

GroupRingElement::GroupRingElement(const GroupWord& w, const Integer& c, bool abelian)
    : abelian_(abelian) {
  if (sgn(c) != 0) terms_.emplace(abelian ? GroupWord(w.letters(), true) : w, c);
}

void GroupRingElement::add_term(const GroupWord& w, const Integer& c) {
  if (sgn(c) == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

GroupRingElement GroupRingElement::conjugate() const {
  GroupRingElement out;
  out.abelian_ = abelian_;
  for (const auto& [w, c] : terms_) out.add_term(w.inverse(abelian_), c);
  return out;
}

GroupRingElement GroupRingElement::as_abelian() const {
  GroupRingElement out;
  out.abelian_ = true;
  for (const auto& [w, c] : terms_) out.add_term(GroupWord(w.letters(), true), c);
  return out;
}

int GroupRingElement::max_generator() const {
  int m = -1;
  for (const auto& [w, c] : terms_)
    for (const auto& l : w.letters()) m = std::max(m, l.first);
  return m;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  abelian_ = abelian_ || o.abelian_;
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  abelian_ = abelian_ || o.abelian_;
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

GroupRingElement operator-(GroupRingElement a) {
  for (auto& [w, c] : a.terms_) c = -c;
  return a;
}

// Matrices over ℤ[π] are multiplied in the opposite ring: the word of x*y is
// word(y)·word(x).  Together with right-to-left evaluation this makes
// evaluation a ring homomorphism on matrices.
GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out;
  out.abelian_ = a.abelian_ || b.abelian_;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add_term(multiply(wb, wa, out.abelian_), ca * cb);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

class ElementParser {
 public:
  ElementParser(const std::string& text, const std::vector<std::string>& gens, bool abelian)
      : s_(text), gens_(gens), abelian_(abelian) {}

  GroupRingElement parse() {
    GroupRingElement total;
    skip();
    if (at_end()) fail("empty group ring element");
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    for (;;) {
      GroupRingElement t = term();
      total += negative ? -t : t;
      skip();
      if (at_end()) break;
      if (peek() == '+') negative = false;
      else if (peek() == '-') negative = true;
      else fail(std::string("unexpected '") + peek() + "'");
      ++pos_;
    }
    if (abelian_) total = total.as_abelian();
    return total;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(1, pos_ + 1, msg); }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Integer number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(s_.substr(start, pos_ - start));
  }

  GroupRingElement term() {
    skip();
    if (at_end()) fail("expected a term");
    Integer coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number();
      have_coeff = true;
      skip();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip();
      } else {
        return GroupRingElement(coeff);
      }
    }
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      fail(have_coeff ? "expected a generator after '*'" : "expected a term");
    std::vector<GroupWord::Letter> letters;
    for (;;) {
      letter(letters);
      skip();
      if (at_end() || peek() != '.') break;
      ++pos_;
      skip();
    }
    return GroupRingElement(GroupWord(std::move(letters), abelian_), coeff, abelian_);
  }

  void letter(std::vector<GroupWord::Letter>& out) {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    const std::string name = s_.substr(start, pos_ - start);
    if (name.empty()) fail("expected a generator name");
    auto it = std::find(gens_.begin(), gens_.end(), name);
    if (it == gens_.end())
      throw Error(ErrorKind::UnknownGenerator, "generator '" + name + "' is not declared");
    const int index = static_cast<int>(it - gens_.begin());
    long power = 1;
    skip();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip();
      bool neg = false;
      if (!at_end() && peek() == '-') {
        neg = true;
        ++pos_;
      }
      const Integer p = number();
      if (!p.fits_slong_p() || p > 1000) fail("exponent too large");
      power = p.get_si();
      if (neg) power = -power;
    }
    const int e = power < 0 ? -1 : 1;
    for (long i = 0; i < (power < 0 ? -power : power); ++i) out.emplace_back(index, e);
  }

  const std::string& s_;
  const std::vector<std::string>& gens_;
  bool abelian_;
  std::size_t pos_ = 0;
};

std::string word_text(const GroupWord& w, const std::vector<std::string>& gens) {
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const long power = static_cast<long>(j - i) * ls[i].second;
    if (!out.empty()) out += '.';
    const auto g = static_cast<std::size_t>(ls[i].first);
    out += g < gens.size() ? gens[g] : "g" + std::to_string(g);
    if (power != 1) out += "^" + std::to_string(power);
    i = j;
  }
  return out;
}

}  // namespace

GroupRingElement parse_group_ring_element(const std::string& text,
                                          const std::vector<std::string>& generators,
                                          Presentation kind) {
  return ElementParser(text, generators, kind == Presentation::free_abelian).parse();
}

std::string to_string(const GroupRingElement& x, const std::vector<std::string>& generators) {
  if (x.zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    const bool negative = sgn(c) < 0;
    const Integer mag = abs(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (w.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += word_text(w, generators);
    }
  }
  return out;
}

}  // namespace sigma8

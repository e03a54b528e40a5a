#include "trefoil/words.hpp"

#include <cctype>
#include <sstream>

namespace trefoil {

std::string free_reduce(const std::string& letters) {
  std::string out;
  out.reserve(letters.size());
  for (char c : letters) {
    inverse_letter(c);
    if (!out.empty() && out.back() == inverse_letter(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

GroupWord::GroupWord(std::string letters) : letters_(free_reduce(letters)) {}

GroupWord GroupWord::parse(const std::string& text) {
  std::string out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*' || text[i] == '.'))
      ++i;
  };
  skip();
  if (text.substr(i) == "1") return GroupWord();
  while (i < text.size()) {
    char c = text[i];
    if (c != 'a' && c != 'A' && c != 'b' && c != 'B')
      throw ParseError("unexpected character '" + std::string(1, c) + "' at position " + std::to_string(i));
    ++i;
    long long n = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      std::string num = text.substr(start, i - start);
      if (num.empty() || num == "-" || num == "+") throw ParseError("missing exponent after '^'");
      n = std::stoll(num);
      if (n > 100000 || n < -100000) throw ParseError("exponent out of range: " + num);
    }
    char letter = n < 0 ? inverse_letter(c) : c;
    out.append(static_cast<std::size_t>(n < 0 ? -n : n), letter);
    skip();
  }
  return GroupWord(out);
}

GroupWord GroupWord::inverse() const {
  std::string r(letters_.rbegin(), letters_.rend());
  for (char& c : r) c = inverse_letter(c);
  return GroupWord(r);
}

GroupWord GroupWord::pow(int n) const {
  GroupWord base = n < 0 ? inverse() : *this;
  std::string r;
  for (int k = 0; k < (n < 0 ? -n : n); ++k) r += base.letters_;
  return GroupWord(r);
}

std::string GroupWord::to_string() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < letters_.size()) {
    char g = static_cast<char>(std::tolower(static_cast<unsigned char>(letters_[i])));
    std::size_t j = i;
    while (j < letters_.size() && std::tolower(static_cast<unsigned char>(letters_[j])) == g) ++j;
    long long n = static_cast<long long>(j - i);
    if (std::isupper(static_cast<unsigned char>(letters_[i]))) n = -n;
    if (!first) os << ' ';
    first = false;
    os << g;
    if (n != 1) os << '^' << n;
    i = j;
  }
  return os.str();
}

void FoxPolynomial::add(const GroupWord& w, long long c) {
  if (c == 0) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else if ((it->second += c) == 0) {
    terms_.erase(it);
  }
}

std::string FoxPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    long long m = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m != 1) os << m << (w.empty() ? "" : "*");
    if (m != 1 && w.empty()) continue;
    os << (w.empty() ? "1" : w.to_string());
  }
  return os.str();
}

FoxPolynomial fox_derivative(const GroupWord& w, char g) {
  if (g != 'a' && g != 'b') throw ParseError("fox derivative is taken with respect to a or b");
  const char ginv = inverse_letter(g);
  FoxPolynomial r;
  const std::string& s = w.letters();
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == g) r.add(GroupWord(s.substr(0, k)), 1);
    if (s[k] == ginv) r.add(GroupWord(s.substr(0, k + 1)), -1);
  }
  return r;
}

GroupWord trefoil_relator() { return GroupWord("aba") * GroupWord("bab").inverse(); }

}  // namespace trefoil

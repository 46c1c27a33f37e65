#include "mcg/word.hpp"

#include <cctype>
#include <stdexcept>

namespace mcg {

GroupWord free_reduce(const std::vector<Letter>& letters) {
  GroupWord out;
  out.letters.reserve(letters.size());
  for (Letter x : letters) {
    if (x == 0) throw std::invalid_argument("zero letter");
    if (!out.letters.empty() && out.letters.back() == -x)
      out.letters.pop_back();
    else
      out.letters.push_back(x);
  }
  return out;
}

GroupWord inverse(const GroupWord& w) {
  GroupWord out;
  out.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(-*it);
  return out;
}

GroupWord concat(const GroupWord& u, const GroupWord& v) {
  std::vector<Letter> all(u.letters);
  all.insert(all.end(), v.letters.begin(), v.letters.end());
  return free_reduce(all);
}

GroupWord conjugate(const GroupWord& w, const GroupWord& by) {
  return concat(concat(by, w), inverse(by));
}

GroupWord power(const GroupWord& w, int n) {
  GroupWord base = n < 0 ? inverse(w) : w;
  int k = n < 0 ? -n : n;
  GroupWord out;
  for (int i = 0; i < k; ++i) out = concat(out, base);
  return out;
}

GroupWord substitute(const GroupWord& w, const std::vector<GroupWord>& images) {
  std::vector<Letter> all;
  for (Letter x : w.letters) {
    size_t i = static_cast<size_t>(letter_index(x)) - 1;
    if (i >= images.size()) throw std::invalid_argument("letter out of range in substitute");
    const GroupWord img = x > 0 ? images[i] : inverse(images[i]);
    all.insert(all.end(), img.letters.begin(), img.letters.end());
  }
  return free_reduce(all);
}

GroupWord parse_word(const std::string& text, int genus) {
  std::vector<Letter> letters;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
      ++i;
      continue;
    }
    if (c != 'a' && c != 'A') throw std::invalid_argument("bad letter name: " + text);
    bool inv = (c == 'A');
    ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("letter missing index: " + text);
    int idx = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      idx = idx * 10 + (text[i] - '0');
      ++i;
    }
    if (idx < 1 || idx > genus) throw std::invalid_argument("letter index out of range: " + text);
    letters.push_back(static_cast<Letter>(inv ? -idx : idx));
  }
  return free_reduce(letters);
}

std::string word_str(const GroupWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    Letter x = w.letters[i];
    out += (x > 0 ? 'a' : 'A');
    out += std::to_string(letter_index(x));
  }
  return out;
}

}  // namespace mcg

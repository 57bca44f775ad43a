#include "arens/word.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace arens::words {

using core::ParseError;

int NormalWord::star_count() const {
  return std::accumulate(star_blocks.begin(), star_blocks.end(), 0);
}

std::vector<Letter> parse_letters(const std::string& text, std::size_t at) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '*') {
      out.push_back(Letter::star);
    } else if (c == 'r') {
      out.push_back(Letter::flip);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      int n = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        n = n * 10 + (text[i] - '0');
        if (n > 1000)
          throw ParseError("adjoint run too long", at + i);
        ++i;
      }
      --i;
      out.insert(out.end(), static_cast<std::size_t>(n), Letter::star);
    } else {
      throw ParseError(std::string("unknown character '") + c + "' in word",
                       at + i);
    }
  }
  return out;
}

AdjWord parse(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    const bool ident = (std::isalpha(static_cast<unsigned char>(c)) || c == '_') &&
                       c != 'r';
    if (!ident) break;
    ++i;
  }
  if (i == 0) throw ParseError("empty base identifier", 0);
  return {text.substr(0, i), parse_letters(text.substr(i), i)};
}

std::string show(const AdjWord& w) {
  std::string out = w.base;
  for (const Letter l : w.letters) out += (l == Letter::star ? '*' : 'r');
  return out;
}

std::string show(const NormalWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.star_blocks.size(); ++i) {
    if (i > 0) out += 'r';
    out.append(static_cast<std::size_t>(w.star_blocks[i]), '*');
  }
  return out;
}

NormalWord normalize_letters(const std::vector<Letter>& letters) {
  NormalWord w;
  for (const Letter l : letters) {
    if (l == Letter::star) {
      ++w.star_blocks.back();
    } else if (w.star_blocks.size() >= 2 && w.star_blocks.back() == 0) {
      // the trailing "r" followed by this one cancels
      w.star_blocks.pop_back();
    } else {
      w.star_blocks.push_back(0);
    }
  }
  return w;
}

NormalWord normalize(const AdjWord& w) { return normalize_letters(w.letters); }

std::vector<Letter> letters_of(const NormalWord& w) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < w.star_blocks.size(); ++i) {
    if (i > 0) out.push_back(Letter::flip);
    out.insert(out.end(), static_cast<std::size_t>(w.star_blocks[i]),
               Letter::star);
  }
  return out;
}

Signature star(const Signature& s) {
  Signature out;
  out.args.push_back(core::dual(s.result));
  for (std::size_t i = 0; i + 1 < s.args.size(); ++i)
    out.args.push_back(s.args[i]);
  out.result = core::dual(s.args.back());
  return out;
}

Signature flip(const Signature& s) {
  Signature out = s;
  std::reverse(out.args.begin(), out.args.end());
  return out;
}

Signature infer_signature(const Signature& base,
                          const std::vector<Letter>& letters) {
  if (base.args.empty() || base.args.size() > 3)
    throw core::InputError("signatures have arity 1, 2 or 3");
  Signature s = base;
  for (const Letter l : letters) s = (l == Letter::star) ? star(s) : flip(s);
  return s;
}

Signature infer_signature(const Signature& base, const AdjWord& w) {
  return infer_signature(base, w.letters);
}

std::string show(const Signature& s) {
  std::string out;
  for (std::size_t i = 0; i < s.args.size(); ++i) {
    if (i > 0) out += " × ";
    out += core::show(s.args[i]);
  }
  out += " → ";
  out += core::show(s.result);
  return out;
}

}  // namespace arens::words

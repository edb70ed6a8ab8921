#include <cctype>
#include <numeric>
#include <sstream>

#include "gaf/perm.hpp"

namespace gaf::perm {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size() + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > degree() || seen[v])
      throw Error("MALFORMED_CYCLES", "images do not form a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw Error("DEGREE_MISMATCH", "cannot compose");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = images_[rhs.images_[i] - 1];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i] - 1] = static_cast<int>(i) + 1;
  return out;
}

Permutation Permutation::pow(long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Permutation acc = identity(degree());
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::size_t Permutation::order() const {
  std::size_t l = 1;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j] - 1) {
      seen[j] = 1;
      ++len;
    }
    l = std::lcm(l, len);
  }
  return l;
}

std::string Permutation::to_cycles() const {
  std::ostringstream os;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i) + 1) continue;
    os << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j] - 1) {
      seen[j] = 1;
      if (!first) os << ' ';
      os << j + 1;
      first = false;
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

// Accepts "(1 2 3)(4 5)", "(123)" (single-digit points written together),
// and separators of spaces or commas.
Permutation parse_permutation(std::string_view text, int degree) {
  if (degree < 1) throw Error("MALFORMED_CYCLES", "degree must be positive");
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 1);
  std::vector<char> used(degree + 1, 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw Error("MALFORMED_CYCLES", "expected '(' at position " + std::to_string(i));
    ++i;
    std::vector<std::string> tokens;
    bool closed = false;
    while (i < text.size()) {
      char ch = text[i];
      if (ch == ')') {
        closed = true;
        ++i;
        break;
      }
      if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw Error("MALFORMED_CYCLES", std::string("unexpected character '") + ch + "'");
      std::string tok;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) tok += text[i++];
      tokens.push_back(tok);
    }
    if (!closed) throw Error("MALFORMED_CYCLES", "unbalanced parentheses");
    std::vector<int> cycle;
    // A lone multi-digit token is read digit by digit when every point is below 10.
    if (tokens.size() == 1 && tokens[0].size() > 1 && degree < 10) {
      for (char d : tokens[0]) cycle.push_back(d - '0');
    } else {
      for (const auto& t : tokens) {
        if (t.size() > 9) throw Error("MALFORMED_CYCLES", "point out of range: " + t);
        cycle.push_back(std::stoi(t));
      }
    }
    for (int p : cycle) {
      if (p < 1 || p > degree) throw Error("MALFORMED_CYCLES", "point out of range: " + std::to_string(p));
      if (used[p]) throw Error("MALFORMED_CYCLES", "repeated point " + std::to_string(p));
      used[p] = 1;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) im[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(im));
}

std::vector<int> fixed_points(const Permutation& p) {
  std::vector<int> out;
  for (int x = 1; x <= p.degree(); ++x)
    if (p(x) == x) out.push_back(x);
  return out;
}

}  // namespace gaf::perm

#include "haarwell/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "haarwell/errors.hpp"

namespace haarwell {

Permutation::Permutation(int k) {
  if (k < 0) throw std::domain_error("Permutation: negative degree");
  images_.resize(k);
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_one_line(std::vector<int> images) {
  const int k = static_cast<int>(images.size());
  std::vector<bool> seen(k, false);
  for (int v : images) {
    if (v < 1 || v > k || seen[v - 1])
      throw std::domain_error("Permutation: not a bijection on {1..k}");
    seen[v - 1] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(const std::string& s, int k) {
  Permutation p(k);
  // Whitespace separates entries just like a comma; normalize to commas and
  // drop the redundant ones so "(1 2)" and "(1,2)" parse the same.
  std::string t;
  for (char c : s) t += isspace(static_cast<unsigned char>(c)) ? ',' : c;
  std::string u;
  for (char c : t) {
    if (c == ',' && (u.empty() || u.back() == ',' || u.back() == '(')) continue;
    if ((c == ')' || c == '(') && !u.empty() && u.back() == ',') u.back() = c;
    else u += c;
  }
  t = u;
  if (t == "e" || t == "()" || t.empty()) return p;

  std::vector<bool> used(k, false);
  size_t pos = 0;
  while (pos < t.size()) {
    if (t[pos] != '(') throw ParseError("cycle notation: expected '(' in '" + s + "'");
    const size_t close = t.find(')', pos);
    if (close == std::string::npos)
      throw ParseError("cycle notation: unbalanced '(' in '" + s + "'");
    std::vector<int> cyc;
    size_t q = pos + 1;
    while (q < close) {
      size_t entry_end = q;
      while (entry_end < close && t[entry_end] != ',' && t[entry_end] != ';') ++entry_end;
      if (entry_end == q) throw ParseError("cycle notation: empty entry in '" + s + "'");
      int v = 0;
      try {
        size_t used_chars = 0;
        v = std::stoi(t.substr(q, entry_end - q), &used_chars);
        if (used_chars != entry_end - q) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ParseError("cycle notation: bad entry in '" + s + "'");
      }
      if (v < 1 || v > k)
        throw ParseError("cycle notation: index " + std::to_string(v) +
                         " outside 1.." + std::to_string(k));
      if (used[v - 1])
        throw ParseError("cycle notation: repeated index " + std::to_string(v));
      used[v - 1] = true;
      cyc.push_back(v);
      q = entry_end + (entry_end < close ? 1 : 0);
    }
    if (cyc.empty()) throw ParseError("cycle notation: empty cycle in '" + s + "'");
    for (size_t i = 0; i < cyc.size(); ++i)
      p.images_[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
    pos = close + 1;
  }
  return p;
}

Permutation Permutation::from_cycle_type(const Partition& type, int k) {
  if (type.sum() != k) throw std::domain_error("Permutation: cycle type does not sum to k");
  std::vector<int> word(static_cast<size_t>(k));
  int start = 0;
  for (int p = 0; p < type.count(); ++p) {
    const int len = type.part(p);
    for (int j = 0; j < len; ++j)
      word[static_cast<size_t>(start + j)] = start + 1 + (j + 1) % len;
    start += len;
  }
  return from_one_line(std::move(word));
}

Permutation Permutation::transposition(int k, int a, int b) {
  if (a < 1 || b < 1 || a > k || b > k || a == b)
    throw std::domain_error("Permutation: bad transposition");
  Permutation p(k);
  std::swap(p.images_[a - 1], p.images_[b - 1]);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p(degree());
  for (int i = 1; i <= degree(); ++i) p.images_[images_[i - 1] - 1] = i;
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if (images_[i - 1] != i) return false;
  return true;
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(degree(), false);
  int cycles = 0;
  for (int i = 1; i <= degree(); ++i) {
    if (seen[i - 1]) continue;
    ++cycles;
    int j = i;
    while (!seen[j - 1]) {
      seen[j - 1] = true;
      j = images_[j - 1];
    }
  }
  return cycles;
}

Partition Permutation::cycle_type() const {
  std::vector<bool> seen(degree(), false);
  std::vector<int> lens;
  for (int i = 1; i <= degree(); ++i) {
    if (seen[i - 1]) continue;
    int len = 0, j = i;
    while (!seen[j - 1]) {
      seen[j - 1] = true;
      j = images_[j - 1];
      ++len;
    }
    lens.push_back(len);
  }
  return Partition(std::move(lens));
}

std::string Permutation::to_cycle_string() const {
  std::vector<bool> seen(degree(), false);
  std::string out;
  for (int i = 1; i <= degree(); ++i) {
    if (seen[i - 1] || images_[i - 1] == i) {
      seen[i - 1] = true;
      continue;
    }
    out += "(";
    int j = i;
    bool first = true;
    while (!seen[j - 1]) {
      if (!first) out += " ";
      out += std::to_string(j);
      seen[j - 1] = true;
      first = false;
      j = images_[j - 1];
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

long Permutation::rank() const {
  const int k = degree();
  long r = 0;
  for (int i = 0; i < k; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < k; ++j)
      if (images_[j] < images_[i]) ++smaller;
    long f = 1;
    for (int m = 2; m <= k - 1 - i; ++m) f *= m;
    r += smaller * f;
  }
  return r;
}

std::vector<Permutation> Permutation::enumerate(int k) {
  if (k > 8)
    throw CapError("Permutation::enumerate: k = " + std::to_string(k) +
                   " exceeds cap 8");
  std::vector<int> word(k);
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(from_one_line(word));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::domain_error("Permutation: degree mismatch in composition");
  Permutation p(a.degree());
  for (int x = 1; x <= a.degree(); ++x) p.images_[x - 1] = a(b(x));
  return p;
}

}  // namespace haarwell

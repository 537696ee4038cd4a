#include "haarwell/partitions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "haarwell/errors.hpp"

namespace haarwell {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::domain_error("Partition: parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

int Partition::sum() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::parse(const std::string& s) {
  if (s == "-" || s.empty()) return Partition();
  std::vector<int> parts;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t end = s.find(',', pos);
    if (end == std::string::npos) end = s.size();
    try {
      size_t used = 0;
      const std::string tok = s.substr(pos, end - pos);
      parts.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError("bad partition: '" + s + "'");
    }
    pos = end + 1;
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::domain_error& e) {
    throw ParseError(std::string("bad partition: ") + e.what());
  }
}

std::vector<Partition> Partition::all(int k) {
  if (k < 0) throw std::domain_error("Partition::all: negative k");
  std::vector<Partition> out;
  std::vector<int> cur;
  // Descending lexicographic: always extend with parts no larger than the last.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(Partition(cur));
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(k, k);
  return out;
}

BigInt factorial(int k) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return f;
}

BigInt conjugacy_class_size(const Partition& mu) {
  const int k = mu.sum();
  BigInt z(1);
  int run_len = 0, run_val = -1;
  auto flush = [&]() {
    if (run_val > 0) {
      BigInt pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(run_val),
                    static_cast<unsigned long>(run_len));
      z *= pw * factorial(run_len);
    }
  };
  for (int p : mu.parts()) {
    if (p == run_val) {
      ++run_len;
    } else {
      flush();
      run_val = p;
      run_len = 1;
    }
  }
  flush();
  BigInt size;
  mpz_divexact(size.get_mpz_t(), factorial(k).get_mpz_t(), z.get_mpz_t());
  return size;
}

std::vector<std::vector<int>> hook_lengths(const YoungDiagram& lambda) {
  const auto& rows = lambda.parts();
  std::vector<int> col_heights(rows.empty() ? 0 : rows[0], 0);
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    for (int c = 0; c < rows[r]; ++c) col_heights[c] = r + 1;
  std::vector<std::vector<int>> hooks(rows.size());
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    hooks[r].resize(rows[r]);
    for (int c = 0; c < rows[r]; ++c)
      hooks[r][c] = (rows[r] - c - 1) + (col_heights[c] - r - 1) + 1;
  }
  return hooks;
}

BigInt dimension_sn(const YoungDiagram& lambda) {
  BigInt prod(1);
  for (const auto& row : hook_lengths(lambda))
    for (int h : row) prod *= h;
  BigInt dim;
  mpz_divexact(dim.get_mpz_t(), factorial(lambda.sum()).get_mpz_t(), prod.get_mpz_t());
  return dim;
}

RationalFunction dimension_un(const YoungDiagram& lambda) {
  IntPolynomial numer(1);
  const IntPolynomial n = IntPolynomial::variable();
  const auto& rows = lambda.parts();
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    for (int c = 0; c < rows[r]; ++c) numer = numer * (n + IntPolynomial(c - r));
  BigInt hooks(1);
  for (const auto& row : hook_lengths(lambda))
    for (int h : row) hooks *= h;
  return RationalFunction(numer, IntPolynomial(hooks));
}

}  // namespace haarwell

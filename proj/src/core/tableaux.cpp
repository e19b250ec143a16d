#include "core/tableaux.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "core/errors.hpp"

namespace skewtab {

Int hook_count(const Partition& mu) {
  if (mu.empty()) return 1;
  const Partition conj = mu.conjugate();
  Int hooks = 1;
  for (unsigned i = 1; i <= mu.height(); ++i) {
    for (unsigned j = 1; j <= mu.parts()[i - 1]; ++j) {
      // arm + leg + 1
      const unsigned long h = (mu.parts()[i - 1] - j) + (conj.parts()[j - 1] - i) + 1;
      hooks *= Int(h);
    }
  }
  return exact_div(factorial(mu.n()), hooks, "hook formula");
}

namespace {

struct SkewRows {
  std::vector<unsigned> outer;
  std::vector<unsigned> inner;  // padded with zeros to outer height
};

SkewRows skew_rows(const SkewShape& shape) {
  SkewRows r;
  r.outer = shape.outer().parts();
  r.inner.assign(r.outer.size(), 0);
  for (unsigned i = 0; i < shape.inner().height(); ++i)
    r.inner[i] = shape.inner().parts()[i];
  return r;
}

void syt_rec(const SkewRows& rows, std::vector<unsigned>& filled, unsigned long placed,
             unsigned long total, Int& count) {
  if (placed == total) {
    ++count;
    return;
  }
  for (std::size_t i = 0; i < rows.outer.size(); ++i) {
    if (rows.inner[i] + filled[i] == rows.outer[i]) continue;  // row full
    // next open cell of row i sits in this 1-based column
    const unsigned col = rows.inner[i] + filled[i] + 1;
    if (i > 0) {
      // the cell above is in the skew diagram iff col > inner[i-1]
      // (columns of row i never extend past outer[i-1]); it must be
      // filled before this one
      if (col > rows.inner[i - 1] && filled[i - 1] < col - rows.inner[i - 1]) continue;
    }
    ++filled[i];
    syt_rec(rows, filled, placed + 1, total, count);
    --filled[i];
  }
}

}  // namespace

Int enumerate_skew_syt(const SkewShape& shape, unsigned cap) {
  const unsigned long total = shape.cells();
  if (total > cap)
    throw CapExceededError("enumerate_skew_syt: " + std::to_string(total) +
                           " cells exceeds cap " + std::to_string(cap));
  if (total == 0) return 1;
  const SkewRows rows = skew_rows(shape);
  std::vector<unsigned> filled(rows.outer.size(), 0);
  Int count = 0;
  syt_rec(rows, filled, 0, total, count);
  return count;
}

Int aitken_count(const SkewShape& shape) {
  const unsigned k = shape.outer().height();
  if (k == 0) return 1;
  const SkewRows rows = skew_rows(shape);

  // Entry (i,j) of the determinant is 1/e_ij! with
  // e_ij = mu_i - nu_j - i + j. Scaling row i by M_i! with
  // M_i = mu_i - i + k >= e_ij makes everything integral:
  // the entry becomes the falling factorial [M_i]_{M_i - e_ij}.
  std::vector<std::vector<Int>> a(k, std::vector<Int>(k));
  Int scale = 1;
  for (unsigned i = 1; i <= k; ++i) {
    const long mi = rows.outer[i - 1];
    const unsigned long big = static_cast<unsigned long>(mi - static_cast<long>(i) + k);
    scale *= factorial(big);
    for (unsigned j = 1; j <= k; ++j) {
      const long e = mi - static_cast<long>(rows.inner[j - 1]) - static_cast<long>(i) +
                     static_cast<long>(j);
      a[i - 1][j - 1] = (e < 0) ? Int(0) : falling_factorial(big, big - static_cast<unsigned long>(e));
    }
  }

  // Bareiss elimination with row pivoting; every division is exact.
  int sign = 1;
  Int prev = 1;
  for (unsigned p = 0; p + 1 < k; ++p) {
    unsigned piv = p;
    while (piv < k && a[piv][p] == 0) ++piv;
    if (piv == k) return 0;  // singular: no skew tableaux
    if (piv != p) {
      std::swap(a[piv], a[p]);
      sign = -sign;
    }
    for (unsigned i = p + 1; i < k; ++i) {
      for (unsigned j = p + 1; j < k; ++j)
        a[i][j] = exact_div(a[p][p] * a[i][j] - a[i][p] * a[p][j], prev,
                            "Bareiss elimination");
      a[i][p] = 0;
    }
    prev = a[p][p];
  }
  const Int det = Int(sign) * a[k - 1][k - 1];

  const Int result = exact_div(factorial(shape.cells()) * det, scale, "determinant count");
  if (result < 0) throw InternalError("determinant count: negative result");
  return result;
}

unsigned long WeightVector::total() const {
  return std::accumulate(entries.begin(), entries.end(), 0ul);
}

namespace {

void ssyt_rec(const std::vector<unsigned>& shape, std::vector<std::vector<unsigned>>& fill,
              std::vector<unsigned>& remaining, unsigned row, unsigned col, Int& count) {
  if (row == shape.size()) {
    ++count;
    return;
  }
  const unsigned next_row = (col + 1 == shape[row]) ? row + 1 : row;
  const unsigned next_col = (col + 1 == shape[row]) ? 0 : col + 1;
  unsigned lo = 1;
  if (col > 0) lo = fill[row][col - 1];               // weak along the row
  if (row > 0) lo = std::max(lo, fill[row - 1][col] + 1);  // strict down the column
  for (unsigned v = lo; v <= remaining.size(); ++v) {
    if (remaining[v - 1] == 0) continue;
    --remaining[v - 1];
    fill[row][col] = v;
    ssyt_rec(shape, fill, remaining, next_row, next_col, count);
    ++remaining[v - 1];
  }
  fill[row][col] = 0;
}

}  // namespace

Int kostka_enumerate(const Partition& mu, const WeightVector& weight, unsigned cap) {
  for (unsigned e : weight.entries)
    if (e == 0) throw DomainError("kostka_enumerate: weight entries must be positive");
  if (weight.total() != mu.n())
    throw DomainError("kostka_enumerate: weight sums to " +
                      std::to_string(weight.total()) + ", needs " + std::to_string(mu.n()));
  if (mu.n() > cap)
    throw CapExceededError("kostka_enumerate: " + std::to_string(mu.n()) +
                           " cells exceeds cap " + std::to_string(cap));
  if (mu.empty()) return 1;
  std::vector<std::vector<unsigned>> fill(mu.height());
  for (unsigned i = 0; i < mu.height(); ++i) fill[i].assign(mu.parts()[i], 0);
  std::vector<unsigned> remaining = weight.entries;
  Int count = 0;
  ssyt_rec(mu.parts(), fill, remaining, 0, 0, count);
  return count;
}

}  // namespace skewtab

#include "shiftlab/field.hpp"

#include <algorithm>
#include <barrier>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "shiftlab/parallel.hpp"

namespace shiftlab {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw std::invalid_argument("field modulus " + std::to_string(p) +
                                " is not a prime below 2^31");
  }
  barrett_ = static_cast<std::uint64_t>((static_cast<UInt128>(1) << 64) / p);
}

bool PrimeField::is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldValue PrimeField::from_signed(std::int64_t x) const {
  const std::int64_t r = x % static_cast<std::int64_t>(p_);
  return static_cast<FieldValue>(r < 0 ? r + p_ : r);
}

FieldValue PrimeField::inv(FieldValue a) const {
  if (a == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(p_) + ")");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return from_signed(t);
}

FieldMatrix FieldMatrix::select_columns(std::span<const std::size_t> columns) const {
  FieldMatrix out(field_, rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    auto src = row(r);
    auto dst = out.row(r);
    for (std::size_t k = 0; k < columns.size(); ++k) dst[k] = src[columns[k]];
  }
  return out;
}

FieldMatrix FieldMatrix::multiply(const FieldMatrix& other) const {
  if (cols_ != other.rows_ || !(field_ == other.field_)) {
    throw std::invalid_argument("FieldMatrix::multiply: shape or field mismatch");
  }
  FieldMatrix out(field_, rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < other.cols_; ++c) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) {
        acc = field_.reduce(acc + static_cast<std::uint64_t>((*this)(r, k)) * other(k, c));
      }
      out(r, c) = static_cast<FieldValue>(acc);
    }
  }
  return out;
}

namespace {

// Entries are kept as unreduced 64-bit accumulators.  For p < 2^20 every row
// update adds less than 2^40, so up to 2^24 updates fit before any reduction
// is needed; larger primes reduce after every update.
constexpr std::uint32_t kLazyPrimeBound = 1u << 20;
constexpr std::size_t kParallelCells = std::size_t{1} << 21;

class Eliminator {
 public:
  explicit Eliminator(const FieldMatrix& m)
      : field_(m.field()), rows_(m.rows()), cols_(m.cols()), data_(rows_ * cols_),
        lazy_(field_.modulus() < kLazyPrimeBound && rows_ < (std::size_t{1} << 23)) {
    for (std::size_t r = 0; r < rows_; ++r) {
      std::copy(m.row(r).begin(), m.row(r).end(), data_.begin() + r * cols_);
    }
  }

  Echelon run() {
    const unsigned workers = rows_ * cols_ >= kParallelCells ? std::max(1u, worker_count()) : 1u;
    if (workers == 1) {
      for (std::size_t c = 0; c < cols_ && top_ < rows_; ++c) {
        if (select_pivot(c)) eliminate_below(c, top_ + 1, rows_);
        finish_column(c);
      }
      return std::move(result_);
    }

    // One barrier phase selects the pivot, the next eliminates in parallel.
    std::barrier sync(static_cast<std::ptrdiff_t>(workers));
    bool have_pivot = false;
    bool done = false;
    auto team = [&](unsigned id) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (id == 0) {
          done = top_ >= rows_;
          have_pivot = !done && select_pivot(c);
        }
        sync.arrive_and_wait();
        if (done) return;
        if (have_pivot) {
          const std::size_t first = top_ + 1;
          const std::size_t span = rows_ - first;
          const std::size_t lo = first + span * id / workers;
          const std::size_t hi = first + span * (id + 1) / workers;
          eliminate_below(c, lo, hi);
        }
        sync.arrive_and_wait();
        if (id == 0) finish_column(c);
      }
    };
    {
      std::vector<std::jthread> threads;
      for (unsigned id = 1; id < workers; ++id) threads.emplace_back(team, id);
      team(0);
    }
    return std::move(result_);
  }

 private:
  std::uint64_t* row(std::size_t r) { return data_.data() + r * cols_; }

  bool select_pivot(std::size_t c) {
    pending_ = false;
    std::size_t found = rows_;
    for (std::size_t r = top_; r < rows_; ++r) {
      std::uint64_t& x = row(r)[c];
      x = field_.reduce(x);
      if (x != 0) {
        found = r;
        break;
      }
    }
    if (found == rows_) return false;
    if (found != top_) {
      std::swap_ranges(row(found) + c, row(found) + cols_, row(top_) + c);
    }
    std::uint64_t* pivot = row(top_);
    const FieldValue scale = field_.inv(static_cast<FieldValue>(pivot[c]));
    for (std::size_t k = c; k < cols_; ++k) {
      pivot[k] = field_.mul(field_.reduce(pivot[k]), scale);
    }
    pending_ = true;
    return true;
  }

  void eliminate_below(std::size_t c, std::size_t lo, std::size_t hi) {
    const std::uint64_t* pivot = row(top_);
    const std::uint64_t p = field_.modulus();
    for (std::size_t r = lo; r < hi; ++r) {
      std::uint64_t* target = row(r);
      const FieldValue lead = field_.reduce(target[c]);
      if (lead == 0) {
        target[c] = 0;
        continue;
      }
      const std::uint64_t factor = p - lead;
      target[c] = 0;
      if (lazy_) {
        for (std::size_t k = c + 1; k < cols_; ++k) target[k] += factor * pivot[k];
      } else {
        for (std::size_t k = c + 1; k < cols_; ++k) {
          target[k] = field_.reduce(field_.reduce(target[k]) + factor * pivot[k]);
        }
      }
    }
  }

  void finish_column(std::size_t c) {
    if (!pending_) return;
    result_.pivot_columns.push_back(c);
    ++result_.rank;
    ++top_;
    pending_ = false;
  }

  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint64_t> data_;
  bool lazy_;
  std::size_t top_ = 0;
  bool pending_ = false;
  Echelon result_;
};

}  // namespace

Echelon row_echelon(const FieldMatrix& matrix) { return Eliminator(matrix).run(); }

Echelon row_echelon(const FieldMatrix& matrix, std::span<const std::size_t> column_order) {
  Echelon e = Eliminator(matrix.select_columns(column_order)).run();
  for (std::size_t& c : e.pivot_columns) c = column_order[c];
  return e;
}

std::size_t rank(const FieldMatrix& matrix) { return Eliminator(matrix).run().rank; }

}  // namespace shiftlab

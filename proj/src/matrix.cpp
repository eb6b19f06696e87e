#include "geninv/matrix.hpp"

#include "geninv/exceptions.hpp"

namespace geninv {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows),
      cols_(cols),
      entries_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) {
    throw InputError("matrix dimensions must be non-negative");
  }
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = 1;
  }
  return m;
}

RationalMatrix RationalMatrix::zero(int rows, int cols) {
  return RationalMatrix(rows, cols);
}

RationalMatrix RationalMatrix::diagonal(const std::vector<Rational>& entries) {
  int n = static_cast<int>(entries.size());
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = entries[i];
  }
  return m;
}

RationalMatrix RationalMatrix::from_rows(
    std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<std::vector<Rational>> converted;
  for (const auto& row : rows) {
    converted.emplace_back(row.begin(), row.end());
  }
  return from_rows(converted);
}

RationalMatrix RationalMatrix::from_rows(
    const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) {
    return RationalMatrix();
  }
  int r = static_cast<int>(rows.size());
  int c = static_cast<int>(rows[0].size());
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) {
      throw InputError("ragged matrix rows");
    }
    for (int j = 0; j < c; ++j) {
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      t.at(j, i) = at(i, j);
    }
  }
  return t;
}

bool RationalMatrix::is_zero() const {
  for (const Rational& x : entries_) {
    if (x != 0) {
      return false;
    }
  }
  return true;
}

bool RationalMatrix::is_identity() const {
  if (!is_square()) {
    return false;
  }
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j) != (i == j ? 1 : 0)) {
        return false;
      }
    }
  }
  return true;
}

namespace {

void require_same_shape(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InputError("matrix shape mismatch");
  }
}

}  // namespace

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_shape(a, b);
  RationalMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.at(i, j) = a.at(i, j) + b.at(i, j);
    }
  }
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_shape(a, b);
  RationalMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.at(i, j) = a.at(i, j) - b.at(i, j);
    }
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) {
    throw InputError("matrix product shape mismatch");
  }
  RationalMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) {
        continue;
      }
      for (int j = 0; j < b.cols(); ++j) {
        out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

RationalMatrix operator*(const Rational& c, const RationalMatrix& a) {
  RationalMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.at(i, j) = c * a.at(i, j);
    }
  }
  return out;
}

RationalMatrix RationalMatrix::operator-() const {
  return Rational(-1) * *this;
}

RationalMatrix RationalMatrix::power(int k) const {
  if (!is_square()) {
    throw InputError("matrix power requires a square matrix");
  }
  RationalMatrix out = identity(rows_);
  for (int i = 0; i < k; ++i) {
    out = out * *this;
  }
  return out;
}

Rational RationalMatrix::trace() const {
  if (!is_square()) {
    throw InputError("trace requires a square matrix");
  }
  Rational t = 0;
  for (int i = 0; i < rows_; ++i) {
    t += at(i, i);
  }
  return t;
}

RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) {
    throw InputError("hstack row mismatch");
  }
  RationalMatrix out(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.at(i, j) = a.at(i, j);
    }
    for (int j = 0; j < b.cols(); ++j) {
      out.at(i, a.cols() + j) = b.at(i, j);
    }
  }
  return out;
}

RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.cols()) {
    throw InputError("vstack column mismatch");
  }
  RationalMatrix out(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.at(i, j) = a.at(i, j);
    }
  }
  for (int i = 0; i < b.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      out.at(a.rows() + i, j) = b.at(i, j);
    }
  }
  return out;
}

RationalMatrix block_diag(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.at(i, j) = a.at(i, j);
    }
  }
  for (int i = 0; i < b.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    }
  }
  return out;
}

RrefResult rref(const RationalMatrix& a) {
  RrefResult result;
  result.reduced = a;
  RationalMatrix& m = result.reduced;
  int lead = 0;
  for (int col = 0; col < m.cols() && lead < m.rows(); ++col) {
    int pivot = -1;
    for (int i = lead; i < m.rows(); ++i) {
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) {
      continue;
    }
    if (pivot != lead) {
      for (int j = 0; j < m.cols(); ++j) {
        std::swap(m.at(pivot, j), m.at(lead, j));
      }
    }
    Rational inv = Rational(1) / m.at(lead, col);
    for (int j = col; j < m.cols(); ++j) {
      m.at(lead, j) *= inv;
    }
    for (int i = 0; i < m.rows(); ++i) {
      if (i == lead || m.at(i, col) == 0) {
        continue;
      }
      Rational factor = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) {
        m.at(i, j) -= factor * m.at(lead, j);
      }
    }
    result.pivot_columns.push_back(col);
    ++lead;
  }
  result.rank = static_cast<int>(result.pivot_columns.size());
  return result;
}

int rank(const RationalMatrix& a) { return rref(a).rank; }

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  if (!a.is_square()) {
    throw InputError("inverse requires a square matrix");
  }
  int n = a.rows();
  RrefResult r = rref(hstack(a, RationalMatrix::identity(n)));
  // Invertible iff the first n pivot columns are exactly 0..n-1.
  if (static_cast<int>(r.pivot_columns.size()) < n) {
    return std::nullopt;
  }
  for (int i = 0; i < n; ++i) {
    if (r.pivot_columns[i] != i) {
      return std::nullopt;
    }
  }
  RationalMatrix inv(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      inv.at(i, j) = r.reduced.at(i, n + j);
    }
  }
  return inv;
}

RationalMatrix kernel_basis(const RationalMatrix& a) {
  RrefResult r = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : r.pivot_columns) {
    is_pivot[c] = true;
  }
  int nullity = a.cols() - r.rank;
  RationalMatrix basis(a.cols(), nullity);
  int out_col = 0;
  for (int free_col = 0; free_col < a.cols(); ++free_col) {
    if (is_pivot[free_col]) {
      continue;
    }
    basis.at(free_col, out_col) = 1;
    for (int p = 0; p < r.rank; ++p) {
      basis.at(r.pivot_columns[p], out_col) = -r.reduced.at(p, free_col);
    }
    ++out_col;
  }
  return basis;
}

bool is_nilpotent(const RationalMatrix& a) {
  return nilpotency_index(a).has_value();
}

std::optional<int> nilpotency_index(const RationalMatrix& a) {
  if (!a.is_square()) {
    throw InputError("nilpotency requires a square matrix");
  }
  RationalMatrix p = RationalMatrix::identity(a.rows());
  for (int k = 0; k <= a.rows(); ++k) {
    if (p.is_zero()) {
      return k;
    }
    p = p * a;
  }
  return std::nullopt;
}

RationalMatrix jordan_block(int n, const Rational& lambda) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = lambda;
    if (i + 1 < n) {
      m.at(i, i + 1) = 1;
    }
  }
  return m;
}

}  // namespace geninv

#include "sio/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sio {

Matrix Matrix::identity(int n) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::scalar(int n, Complex c) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (n_ != other.n_) throw std::invalid_argument("matrix size mismatch");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] += other.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (n_ != other.n_) throw std::invalid_argument("matrix size mismatch");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] -= other.a_[k];
  return *this;
}

Matrix& Matrix::operator*=(Complex c) {
  for (auto& v : a_) v *= c;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  const int n = a.n_;
  Matrix out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Matrix block2x2(const Matrix& a11, const Matrix& a12, const Matrix& a21, const Matrix& a22) {
  const int n = a11.size();
  if (a12.size() != n || a21.size() != n || a22.size() != n)
    throw std::invalid_argument("block size mismatch");
  Matrix out(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      out(i, j) = a11(i, j);
      out(i, j + n) = a12(i, j);
      out(i + n, j) = a21(i, j);
      out(i + n, j + n) = a22(i, j);
    }
  return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix size mismatch");
  double worst = 0.0;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

double max_abs(const Matrix& a) {
  double worst = 0.0;
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) worst = std::max(worst, std::abs(a(i, j)));
  return worst;
}

Complex Matrix::det() const {
  if (n_ == 0) return 1.0;
  if (n_ == 1) return a_[0];
  if (n_ == 2) return a_[0] * a_[3] - a_[1] * a_[2];
  Matrix lu = *this;
  const int n = n_;
  Complex d = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    double best = std::abs(lu(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double v = std::abs(lu(r, col));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(lu(col, j), lu(pivot, j));
      d = -d;
    }
    d *= lu(col, col);
    for (int r = col + 1; r < n; ++r) {
      const Complex f = lu(r, col) / lu(col, col);
      for (int j = col; j < n; ++j) lu(r, j) -= f * lu(col, j);
    }
  }
  return d;
}

namespace {

// Dense polynomial, ascending coefficients.
using Poly = std::vector<Complex>;

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0.0);
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0.0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Laplace expansion along the first active row; entries of A - x I are
// degree-1 polynomials. Sizes here are at most 8, so n! recursion is fine.
Poly det_minor(const Matrix& a, int row, const std::vector<int>& cols) {
  if (cols.size() == 1) {
    const int c = cols[0];
    Poly p{a(row, c), row == c ? Complex(-1.0) : Complex(0.0)};
    return p;
  }
  Poly acc{0.0};
  for (size_t k = 0; k < cols.size(); ++k) {
    const int c = cols[k];
    Poly entry{a(row, c), row == c ? Complex(-1.0) : Complex(0.0)};
    if (entry[0] == 0.0 && entry[1] == 0.0) continue;
    std::vector<int> rest;
    rest.reserve(cols.size() - 1);
    for (size_t j = 0; j < cols.size(); ++j)
      if (j != k) rest.push_back(cols[j]);
    Poly sub = det_minor(a, row + 1, rest);
    Poly term = poly_mul(entry, sub);
    if (k % 2 == 1)
      for (auto& v : term) v = -v;
    acc = poly_add(acc, term);
  }
  return acc;
}

Complex poly_eval(const Poly& p, Complex x) {
  Complex acc = 0.0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Complex poly_eval_deriv(const Poly& p, Complex x) {
  Complex acc = 0.0;
  for (size_t i = p.size(); i-- > 1;) acc = acc * x + double(i) * p[i];
  return acc;
}

}  // namespace

std::vector<Complex> char_poly(const Matrix& a) {
  const int n = a.size();
  if (n == 0) return {Complex(1.0)};
  std::vector<int> cols(n);
  for (int i = 0; i < n; ++i) cols[i] = i;
  Poly p = det_minor(a, 0, cols);
  p.resize(static_cast<size_t>(n) + 1, 0.0);
  return p;
}

std::vector<Complex> poly_roots(std::vector<Complex> coeffs) {
  while (coeffs.size() > 1 && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
  const int deg = static_cast<int>(coeffs.size()) - 1;
  if (deg <= 0) return {};
  const Complex lead = coeffs.back();
  for (auto& c : coeffs) c /= lead;
  if (deg == 1) return {-coeffs[0]};
  if (deg == 2) {
    const Complex b = coeffs[1], c = coeffs[0];
    const Complex s = std::sqrt(b * b - 4.0 * c);
    return {(-b + s) / 2.0, (-b - s) / 2.0};
  }

  // Durand-Kerner with Newton polish.
  double radius = 0.0;
  for (int i = 0; i < deg; ++i) radius = std::max(radius, std::abs(coeffs[static_cast<size_t>(i)]));
  radius = 1.0 + radius;
  std::vector<Complex> x(static_cast<size_t>(deg));
  Complex seed(0.4, 0.9);
  Complex cur = seed;
  for (int k = 0; k < deg; ++k) {
    x[static_cast<size_t>(k)] = radius * cur;
    cur *= seed;
  }
  for (int iter = 0; iter < 400; ++iter) {
    double worst = 0.0;
    for (int k = 0; k < deg; ++k) {
      Complex denom = 1.0;
      for (int j = 0; j < deg; ++j)
        if (j != k) denom *= x[static_cast<size_t>(k)] - x[static_cast<size_t>(j)];
      if (denom == 0.0) denom = 1e-30;
      const Complex step = poly_eval(coeffs, x[static_cast<size_t>(k)]) / denom;
      x[static_cast<size_t>(k)] -= step;
      worst = std::max(worst, std::abs(step) / (1.0 + std::abs(x[static_cast<size_t>(k)])));
    }
    if (worst < 1e-14) break;
  }
  for (auto& r : x) {
    for (int it = 0; it < 3; ++it) {
      const Complex d = poly_eval_deriv(coeffs, r);
      if (std::abs(d) < 1e-30) break;
      r -= poly_eval(coeffs, r) / d;
    }
  }
  return x;
}

std::vector<Complex> Matrix::eigenvalues() const {
  if (n_ == 0) return {};
  if (n_ == 1) return {a_[0]};
  if (n_ == 2) {
    const Complex tr = a_[0] + a_[3];
    const Complex dt = a_[0] * a_[3] - a_[1] * a_[2];
    const Complex s = std::sqrt(tr * tr - 4.0 * dt);
    return {(tr + s) / 2.0, (tr - s) / 2.0};
  }
  return poly_roots(char_poly(*this));
}

}  // namespace sio

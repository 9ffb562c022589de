// Small dense complex matrices (square, size <= 8) used by the symbol calculus.
#pragma once

#include <complex>
#include <vector>

namespace sio {

using Complex = std::complex<double>;

class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

  static Matrix identity(int n);
  static Matrix zero(int n) { return Matrix(n); }
  static Matrix scalar(int n, Complex c);

  int size() const { return n_; }
  Complex& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const Complex& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(Complex c);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Complex c, Matrix a) { return a *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  // Determinant by LU with partial pivoting.
  Complex det() const;

  // All eigenvalues (with multiplicity). Closed form for n<=2, otherwise
  // characteristic polynomial by cofactor expansion plus root iteration.
  std::vector<Complex> eigenvalues() const;

 private:
  int n_ = 0;
  std::vector<Complex> a_;
};

Matrix block2x2(const Matrix& a11, const Matrix& a12, const Matrix& a21, const Matrix& a22);

// max_ij |a_ij - b_ij|; matrices must have equal size.
double max_abs_diff(const Matrix& a, const Matrix& b);
double max_abs(const Matrix& a);

// Coefficients of det(A - x I), ascending in x (degree n, leading (-1)^n).
std::vector<Complex> char_poly(const Matrix& a);

// Roots of a complex polynomial given by ascending coefficients.
std::vector<Complex> poly_roots(std::vector<Complex> coeffs);

}  // namespace sio

#pragma once

#include <array>
#include <complex>
#include <concepts>
#include <span>

#include "vstoch/errors.hpp"
#include "vstoch/field.hpp"
#include "vstoch/quaternion.hpp"

namespace vstoch {

using Complex = std::complex<double>;

/// The closed set of scalar types backing the three fields.
template <class T>
concept ScalarType = std::same_as<T, double> || std::same_as<T, Complex> ||
                     std::same_as<T, Quaternion>;

template <ScalarType T>
inline constexpr Field field_of_v = Field::R;
template <>
inline constexpr Field field_of_v<Complex> = Field::C;
template <>
inline constexpr Field field_of_v<Quaternion> = Field::H;

template <ScalarType T>
inline constexpr int coeff_count_v = real_dim(field_of_v<T>);

constexpr double conj_of(double s) { return s; }
inline Complex conj_of(const Complex& s) { return std::conj(s); }
constexpr Quaternion conj_of(const Quaternion& s) { return conj(s); }

constexpr double norm_sq_of(double s) { return s * s; }
inline double norm_sq_of(const Complex& s) {
  return s.real() * s.real() + s.imag() * s.imag();
}
constexpr double norm_sq_of(const Quaternion& s) { return norm_sq(s); }

template <ScalarType T>
double abs_of(const T& s) {
  return std::sqrt(norm_sq_of(s));
}

/// Multiplicative identity scaled by a real.
template <ScalarType T>
constexpr T from_real(double v) {
  if constexpr (std::same_as<T, double>) {
    return v;
  } else if constexpr (std::same_as<T, Complex>) {
    return Complex(v, 0.0);
  } else {
    return Quaternion(v);
  }
}

template <ScalarType T>
std::array<double, coeff_count_v<T>> to_coeffs(const T& s) {
  if constexpr (std::same_as<T, double>) {
    return {s};
  } else if constexpr (std::same_as<T, Complex>) {
    return {s.real(), s.imag()};
  } else {
    return {s.w, s.x, s.y, s.z};
  }
}

template <ScalarType T>
T from_coeffs(std::span<const double> c) {
  if (static_cast<int>(c.size()) != coeff_count_v<T>)
    throw InvalidInputError("wrong number of scalar coefficients");
  if constexpr (std::same_as<T, double>) {
    return c[0];
  } else if constexpr (std::same_as<T, Complex>) {
    return Complex(c[0], c[1]);
  } else {
    return Quaternion(c[0], c[1], c[2], c[3]);
  }
}

/// Hermitian inner product on F^d, conjugate-linear in the first slot:
/// inner(u, v) = sum_k conj(u_k) v_k. F^d is treated as a right F-module.
template <ScalarType T>
T inner(std::span<const T> u, std::span<const T> v) {
  if (u.size() != v.size())
    throw InvalidInputError("inner product of vectors of different dimension");
  T acc = from_real<T>(0.0);
  for (std::size_t k = 0; k < u.size(); ++k) acc += conj_of(u[k]) * v[k];
  return acc;
}

template <ScalarType T>
double norm_sq(std::span<const T> u) {
  double acc = 0.0;
  for (const T& s : u) acc += norm_sq_of(s);
  return acc;
}

}  // namespace vstoch

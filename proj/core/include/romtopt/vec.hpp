#ifndef ROMTOPT_VEC_HPP
#define ROMTOPT_VEC_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace romtopt {

using Vector = std::vector<double>;

inline double dot(const Vector& a, const Vector& b)
{
  if (a.size() != b.size())
    throw std::invalid_argument("dot: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(const Vector& a) { return std::sqrt(dot(a, a)); }

inline double norm1(const Vector& a)
{
  double s = 0.0;
  for (double v : a) s += std::abs(v);
  return s;
}

inline double norm_inf(const Vector& a)
{
  double s = 0.0;
  for (double v : a) s = std::max(s, std::abs(v));
  return s;
}

// y += alpha*x
inline void axpy(double alpha, const Vector& x, Vector& y)
{
  if (x.size() != y.size())
    throw std::invalid_argument("axpy: size mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline void scale(double alpha, Vector& x)
{
  for (double& v : x) v *= alpha;
}

}  // namespace romtopt

#endif

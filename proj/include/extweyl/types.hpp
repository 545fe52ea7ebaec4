#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <vector>

// Eigen 3.4 dense types expose a void const_iterator, which trips Boost's
// byte-container detection whenever Eigen probes scalar convertibility.
namespace boost::multiprecision::detail {
template <class S, int R, int C, int O, int MR, int MC>
struct is_byte_container<Eigen::Matrix<S, R, C, O, MR, MC>> : boost::false_type {};
template <class X, int R, int C, bool I>
struct is_byte_container<Eigen::Block<X, R, C, I>> : boost::false_type {};
template <class D>
struct is_byte_container<Eigen::MatrixBase<D>> : boost::false_type {};
}  // namespace boost::multiprecision::detail

namespace extweyl {

// Expression templates off so that Eigen sees plain value types.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IMat = Mat<std::int64_t>;
using IVec = Vec<std::int64_t>;
using BMat = Mat<BigInt>;
using BVec = Vec<BigInt>;

template <class To, class From>
Mat<To> cast_matrix(const Mat<From>& m) {
  Mat<To> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = To(m(i, j));
  return out;
}

template <class To, class From>
Vec<To> cast_vector(const Vec<From>& v) {
  Vec<To> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = To(v(i));
  return out;
}

inline std::vector<std::int64_t> to_std(const IVec& v) {
  return std::vector<std::int64_t>(v.data(), v.data() + v.size());
}

inline IVec from_std(const std::vector<std::int64_t>& v) {
  IVec out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

// Lexicographic order, so vectors can key std::map / std::set.
struct VecLess {
  bool operator()(const IVec& a, const IVec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i)
      if (a(i) != b(i)) return a(i) < b(i);
    return false;
  }
};

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t mod_floor(std::int64_t a, std::int64_t b) { return a - b * floor_div(a, b); }

}  // namespace extweyl

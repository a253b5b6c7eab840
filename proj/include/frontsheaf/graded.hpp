#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "frontsheaf/matrix.hpp"

namespace frontsheaf {

// Finite-dimensional graded vector space with a fixed ordered basis of labeled
// generators. The order is part of the data; all matrices downstream are
// written with respect to it.
class GradedModule {
public:
  GradedModule() = default;

  void add(const std::string& label, int degree) {
    if (index_.count(label)) throw std::invalid_argument("duplicate basis label: " + label);
    index_[label] = static_cast<int>(labels_.size());
    labels_.push_back(label);
    degrees_.push_back(degree);
  }

  int dim() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_.at(i); }
  int degree(int i) const { return degrees_.at(i); }
  int index(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw std::out_of_range("no basis label: " + label);
    return it->second;
  }
  bool has(const std::string& label) const { return index_.count(label) != 0; }

  GradedModule shifted(int by) const {
    GradedModule m(*this);
    for (int& d : m.degrees_) d += by;
    return m;
  }

  bool operator==(const GradedModule& o) const {
    return labels_ == o.labels_ && degrees_ == o.degrees_;
  }
  bool operator!=(const GradedModule& o) const { return !(*this == o); }

private:
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
  std::map<std::string, int> index_;
};

// Field-linear map of homogeneous degree between graded modules, stored as a
// (target basis) x (source basis) matrix. Construction rejects entries that
// violate the grading.
class GradedLinearMap {
public:
  GradedLinearMap(GradedModule source, GradedModule target, int degree, FMatrix matrix)
      : source_(std::move(source)), target_(std::move(target)), degree_(degree),
        matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
      throw std::invalid_argument("graded map matrix shape mismatch");
    for (int t = 0; t < target_.dim(); ++t)
      for (int s = 0; s < source_.dim(); ++s)
        if (matrix_.at(t, s) != 0 && target_.degree(t) != source_.degree(s) + degree_)
          throw std::invalid_argument("graded map entry violates degrees at (" +
                                      target_.label(t) + ", " + source_.label(s) + ")");
  }

  static GradedLinearMap zero(PrimeField f, const GradedModule& source,
                              const GradedModule& target, int degree) {
    return GradedLinearMap(source, target, degree, FMatrix(f, target.dim(), source.dim()));
  }

  static GradedLinearMap identity(PrimeField f, const GradedModule& m) {
    return GradedLinearMap(m, m, 0, FMatrix::identity(f, m.dim()));
  }

  const GradedModule& source() const { return source_; }
  const GradedModule& target() const { return target_; }
  int degree() const { return degree_; }
  const FMatrix& matrix() const { return matrix_; }

  GradedLinearMap compose_after(const GradedLinearMap& first) const {
    if (first.target_ != source_)
      throw std::invalid_argument("composition: module mismatch");
    return GradedLinearMap(first.source_, target_, degree_ + first.degree_,
                           matrix_ * first.matrix_);
  }

  bool operator==(const GradedLinearMap& o) const {
    return source_ == o.source_ && target_ == o.target_ && degree_ == o.degree_ &&
           matrix_ == o.matrix_;
  }

private:
  GradedModule source_, target_;
  int degree_;
  FMatrix matrix_;
};

}  // namespace frontsheaf

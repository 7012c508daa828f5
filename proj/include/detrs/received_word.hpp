#pragma once

#include <vector>

#include "detrs/unipoly.hpp"

namespace detrs {

// The noisy codeword: n points with pairwise distinct abscissae.
class ReceivedWord {
 public:
  ReceivedWord(FieldPtr f, std::vector<Point> pts);  // InvalidWord on repeats or n = 0

  const FieldPtr& field_ptr() const { return f_; }
  const Field& field() const { return *f_; }
  std::size_t size() const { return pts_.size(); }
  const Point& operator[](std::size_t j) const { return pts_[j]; }
  const std::vector<Point>& points() const { return pts_; }
  std::vector<Fe> alphas() const;
  std::vector<Fe> betas() const;

 private:
  FieldPtr f_;
  std::vector<Point> pts_;
};

int agreement(const UniPoly& f, const ReceivedWord& w);

}  // namespace detrs

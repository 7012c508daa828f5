#include "detrs/received_word.hpp"

#include <set>

namespace detrs {

ReceivedWord::ReceivedWord(FieldPtr f, std::vector<Point> pts) : f_(std::move(f)), pts_(std::move(pts)) {
  if (pts_.empty()) fail(ErrorKind::InvalidWord, "received word is empty");
  std::set<u64> seen;
  for (const Point& p : pts_) {
    if (p.x.v >= f_->order() || p.y.v >= f_->order()) fail(ErrorKind::InvalidWord, "coordinate outside the field");
    if (!seen.insert(p.x.v).second) fail(ErrorKind::InvalidWord, "repeated abscissa");
  }
}

std::vector<Fe> ReceivedWord::alphas() const {
  std::vector<Fe> a;
  for (const Point& p : pts_) a.push_back(p.x);
  return a;
}

std::vector<Fe> ReceivedWord::betas() const {
  std::vector<Fe> b;
  for (const Point& p : pts_) b.push_back(p.y);
  return b;
}

int agreement(const UniPoly& f, const ReceivedWord& w) {
  int n = 0;
  for (const Point& p : w.points())
    if (f.eval(p.x) == p.y) ++n;
  return n;
}

}  // namespace detrs

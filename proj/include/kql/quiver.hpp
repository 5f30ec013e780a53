#pragma once

// McKay quivers, the framed extension, and the dimension vector delta.
//
// Arrows come in reverse pairs; epsilon assigns +1 to the lexicographically
// first oriented copy of each edge (loops: the first listed copy). For the
// cyclic family each Dynkin arrow additionally carries an x/y role: x-arrows
// raise the weight grading by 1 mod m, y-arrows lower it.

#include <string>
#include <vector>

#include "kql/group.hpp"

namespace kql {

inline constexpr int kInfVertex = -1;

enum class ArrowRole { DynkinX, DynkinY, DynkinPlain, FrameOut, FrameBack };

struct Arrow {
  int tail = 0;
  int head = 0;
  int eps = 1;
  int reverse = -1;  // index of the opposite orientation
  ArrowRole role = ArrowRole::DynkinPlain;
  std::string id;
};

struct McKayQuiver {
  GroupSpec group;
  int vertices = 0;
  std::vector<std::vector<int>> mult;  // arrow multiplicities a_ij
  std::vector<Arrow> arrows;           // both orientations of every edge
};

struct DimVector {
  int inf = 0;
  std::vector<int> v;

  int at(int vertex) const { return vertex == kInfVertex ? inf : v[vertex]; }
  int total() const {
    int t = inf;
    for (int x : v) t += x;
    return t;
  }
  bool operator==(const DimVector& o) const = default;
};

struct FramedQuiver {
  McKayQuiver base;
  int r = 1;
  std::vector<Arrow> arrows;  // Dynkin arrows first, then b_0..b_{r-1}, then reverses

  int dynkinVertices() const { return base.vertices; }
  int arrowCount() const { return static_cast<int>(arrows.size()); }
  const GroupSpec& group() const { return base.group; }
  int findArrow(const std::string& id) const;
  bool sameShape(const FramedQuiver& o) const;
};

McKayQuiver mckay_quiver(const CharacterTable& ct, double tol = 1e-6);

std::vector<int> delta(const CharacterTable& ct);

FramedQuiver frame(const McKayQuiver& q, int r);

// 2I - A applied to d, where A is the arrow-count adjacency matrix.
std::vector<int> affineCartanApply(const McKayQuiver& q,
                                   const std::vector<int>& d);

// Expected affine adjacency table in the canonical vertex order.
std::vector<std::vector<int>> expectedAffineAdjacency(const GroupSpec& g);

}  // namespace kql

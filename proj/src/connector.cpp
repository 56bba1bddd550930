// Copyright 2026 The odiam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <array>
#include <map>
#include <sstream>

#include "odiam/core.hpp"
#include "odiam/error.hpp"

namespace odiam {

namespace {

// Local view of the (at most four) connector edges: every assignment is
// made here first so a length-1 path sees its single edge from both ends.
class ConnectorEdges {
 public:
  ConnectorEdges(const MixedGraph& h, const Connector& c) : paths_{&c.path1, &c.path2} {
    for (const Path* p : paths_) {
      for (std::size_t j = 0; j + 1 < p->vertices.size(); ++j) {
        const VertexId x = (*p)[j];
        const VertexId y = (*p)[j + 1];
        if (!h.find(x, y)) {
          fail(ErrorCode::kInvalidArgument, "orient_connector: connector edge missing from graph");
        }
        dir_[key(x, y)] = h.relation(std::min(x, y), std::max(x, y));
      }
    }
  }

  // +1 when x -> y, -1 when y -> x, 0 when undirected.
  int rel(VertexId x, VertexId y) const {
    const int d = dir_.at(key(x, y));
    return x < y ? d : -d;
  }
  // Orients x -> y if still undirected; returns false when it points the
  // other way.
  bool set(VertexId x, VertexId y) {
    int& d = dir_.at(key(x, y));
    const int want = x < y ? 1 : -1;
    if (d == 0) {
      d = want;
      assigned_.push_back(Arc{x, y});
      return true;
    }
    return d == want;
  }

  const Path& path(int k) const { return *paths_[k]; }
  VertexId focus() const { return path(0).front(); }
  VertexId partner() const { return path(0).back(); }
  VertexId after_focus(int k) const { return path(k)[1]; }
  VertexId before_partner(int k) const { return path(k)[path(k).vertices.size() - 2]; }

  // Focus edge of path k: +1 leaving the focus, -1 entering it.
  int fe(int k) const { return rel(focus(), after_focus(k)); }
  // Partner edge of path k: +1 entering the partner, -1 leaving it.
  int ge(int k) const { return rel(before_partner(k), partner()); }
  void set_fe(int k, int s) {
    s > 0 ? set(focus(), after_focus(k)) : set(after_focus(k), focus());
  }
  void set_ge(int k, int s) {
    s > 0 ? set(before_partner(k), partner()) : set(partner(), before_partner(k));
  }

  // Whether path `forward` can run focus -> partner and the other path
  // partner -> focus without reversing anything.
  bool cycle_compatible(int forward) const {
    for (int k = 0; k < 2; ++k) {
      const Path& p = path(k);
      for (std::size_t j = 0; j + 1 < p.vertices.size(); ++j) {
        const int r = rel(p[j], p[j + 1]);
        if (r != 0 && r != (k == forward ? 1 : -1)) return false;
      }
    }
    return true;
  }
  void complete_cycle(int forward) {
    for (int k = 0; k < 2; ++k) {
      const Path& p = path(k);
      for (std::size_t j = 0; j + 1 < p.vertices.size(); ++j) {
        k == forward ? set(p[j], p[j + 1]) : set(p[j + 1], p[j]);
      }
    }
  }

  bool fully_oriented() const {
    for (const auto& [k, d] : dir_) {
      if (d == 0) return false;
    }
    return true;
  }

  std::vector<Arc> take_assigned() { return std::move(assigned_); }

 private:
  static std::pair<VertexId, VertexId> key(VertexId x, VertexId y) {
    return {std::min(x, y), std::max(x, y)};
  }

  std::array<const Path*, 2> paths_;
  std::map<std::pair<VertexId, VertexId>, int> dir_;
  std::vector<Arc> assigned_;
};

// Gives one focus edge the direction `first` and the other the opposite,
// respecting whichever is already oriented.
void split_focus_edges(ConnectorEdges& e, int first) {
  if (e.fe(0) != 0) {
    e.set_fe(1, -e.fe(0));
  } else if (e.fe(1) != 0) {
    e.set_fe(0, -e.fe(1));
  } else {
    e.set_fe(0, first);
    e.set_fe(1, -first);
  }
}

}  // namespace

ConnectorOrientation orient_connector(const MixedGraph& h, const Connector& c) {
  if (c.path1.length() < 1 || c.path1.length() > 2 || c.path2.length() < 1 ||
      c.path2.length() > 2 || c.path1.front() != c.path2.front() ||
      c.path1.back() != c.path2.back()) {
    fail(ErrorCode::kInvalidArgument, "orient_connector: malformed connector");
  }
  ConnectorEdges e(h, c);
  ConnectorOrientation out;
  auto fe = [&](int k) { return e.fe(k); };
  auto ge = [&](int k) { return e.ge(k); };

  if (e.cycle_compatible(0)) {
    out.which = ConnectorCase::kCompleteCycle;
    e.complete_cycle(0);
  } else if (e.cycle_compatible(1)) {
    out.which = ConnectorCase::kCompleteCycle;
    e.complete_cycle(1);
  } else if (fe(0) == -1 && fe(1) == -1) {
    out.which = ConnectorCase::kBothIntoFocus;
    e.set_ge(0, -1);
    e.set_ge(1, -1);
  } else if ((fe(0) == -1 && ge(1) == -1) || (fe(1) == -1 && ge(0) == -1)) {
    out.which = ConnectorCase::kInThenPartnerOut;
    const int in = fe(0) == -1 && ge(1) == -1 ? 0 : 1;
    e.set_fe(1 - in, +1);
    e.set_ge(in, -1);
  } else if ((fe(0) == -1 && ge(0) == 1) || (fe(1) == -1 && ge(1) == 1)) {
    out.which = ConnectorCase::kInAndPartnerIn;
    const int in = fe(0) == -1 && ge(0) == 1 ? 0 : 1;
    e.set_fe(1 - in, +1);
    e.set_ge(1 - in, +1);
  } else if (fe(0) == 1 && fe(1) == 1) {
    out.which = ConnectorCase::kBothOutOfFocus;
    e.set_ge(0, +1);
    e.set_ge(1, +1);
  } else if (ge(0) == 1 && ge(1) == 1) {
    out.which = ConnectorCase::kBothIntoPartner;
    split_focus_edges(e, +1);
  } else if ((fe(0) == 1 && ge(1) == 1) || (fe(1) == 1 && ge(0) == 1)) {
    out.which = ConnectorCase::kOutThenPartnerIn;
    const int outk = fe(0) == 1 && ge(1) == 1 ? 0 : 1;
    e.set_fe(1 - outk, -1);
    e.set_ge(outk, +1);
  } else if ((fe(0) == 1 && ge(0) == -1) || (fe(1) == 1 && ge(1) == -1)) {
    out.which = ConnectorCase::kOutAndPartnerOut;
    const int outk = fe(0) == 1 && ge(0) == -1 ? 0 : 1;
    e.set_fe(1 - outk, -1);
    e.set_ge(1 - outk, -1);
  } else if (ge(0) == -1 && ge(1) == -1) {
    out.which = ConnectorCase::kBothOutOfPartner;
    split_focus_edges(e, -1);
  } else {
    std::ostringstream msg;
    msg << "no connector case for focus " << e.focus() << " partner " << e.partner()
        << " (fe=" << fe(0) << "," << fe(1) << " ge=" << ge(0) << "," << ge(1) << ")";
    fail(ErrorCode::kCaseFallthrough, msg.str());
  }
  if (!e.fully_oriented()) {
    std::ostringstream msg;
    msg << "connector case " << static_cast<int>(out.which) << " left an edge undirected (focus "
        << e.focus() << ", partner " << e.partner() << ")";
    fail(ErrorCode::kCaseFallthrough, msg.str());
  }
  out.assigned = e.take_assigned();
  return out;
}

}  // namespace odiam

// Copyright 2026 The wdalg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wdalg/equality.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <utility>

namespace wdalg {

namespace {

constexpr int kOuter = -1;

// Wire with endpoints as box indices (0-based) or kOuter.
struct Edge {
  int src = 0;
  int src_port = 0;
  int tgt = 0;
  int tgt_port = 0;
};

// Inner boxes of one or more diagrams laid side by side, with incidence.
struct Structure {
  std::vector<const Box*> boxes;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> incident;

  void add(const WiringDiagram& d) {
    const int base = static_cast<int>(boxes.size());
    for (const auto& b : d.boxes()) {
      boxes.push_back(&b);
      incident.emplace_back();
    }
    auto index = [&](int id) { return id >= kFirstBoxId ? base + id - kFirstBoxId : kOuter; };
    for (const auto& w : d.wires()) {
      const Edge e{index(w.source.box), w.source.port, index(w.target.box),
                   w.target.port};
      const int k = static_cast<int>(edges.size());
      edges.push_back(e);
      if (e.src != kOuter) {
        incident[e.src].push_back(k);
      }
      if (e.tgt != kOuter && e.tgt != e.src) {
        incident[e.tgt].push_back(k);
      }
    }
  }

  [[nodiscard]] int size() const { return static_cast<int>(boxes.size()); }
};

std::vector<int> rank_of(const std::vector<std::vector<int>>& keys) {
  std::vector<std::vector<int>> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out(keys.size());
  for (std::size_t v = 0; v < keys.size(); ++v) {
    out[v] = static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), keys[v]) -
        sorted.begin());
  }
  return out;
}

std::vector<int> initial_colors(const Structure& s) {
  std::vector<const Box*> sorted = s.boxes;
  std::sort(sorted.begin(), sorted.end(),
            [](const Box* a, const Box* b) { return *a < *b; });
  sorted.erase(std::unique(sorted.begin(), sorted.end(),
                           [](const Box* a, const Box* b) { return *a == *b; }),
               sorted.end());
  std::vector<int> out(s.boxes.size());
  for (std::size_t v = 0; v < s.boxes.size(); ++v) {
    out[v] = static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), s.boxes[v],
                         [](const Box* a, const Box* b) { return *a < *b; }) -
        sorted.begin());
  }
  return out;
}

int count_colors(const std::vector<int>& colors) {
  return static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
}

// Equitable refinement. Each box is recolored by its old color and the
// sorted multiset of its wire attachments; ranks are taken over sorted
// signatures, so the result is invariant under box renumbering and never
// merges classes.
std::vector<int> refine(const Structure& s, std::vector<int> colors) {
  int classes = count_colors(colors);
  while (true) {
    std::vector<std::vector<int>> keys(s.boxes.size());
    for (int v = 0; v < s.size(); ++v) {
      std::vector<std::array<int, 5>> feats;
      for (int k : s.incident[v]) {
        const Edge& e = s.edges[k];
        auto color = [&](int u) { return u == kOuter ? -1 : colors[u]; };
        if (e.src == v) {
          feats.push_back({0, e.src_port, color(e.tgt), e.tgt_port,
                           e.tgt == v ? 1 : 0});
        }
        if (e.tgt == v) {
          feats.push_back({1, e.tgt_port, color(e.src), e.src_port,
                           e.src == v ? 1 : 0});
        }
      }
      std::sort(feats.begin(), feats.end());
      auto& key = keys[v];
      key.push_back(colors[v]);
      for (const auto& f : feats) {
        key.insert(key.end(), f.begin(), f.end());
      }
    }
    colors = rank_of(keys);
    const int next = count_colors(colors);
    if (next == classes) {
      return colors;
    }
    classes = next;
  }
}

using WireKey = std::array<int, 4>;

WireKey key_under(const Edge& e, const std::vector<int>& map) {
  auto img = [&](int u) { return u == kOuter ? kOuter : map[u]; };
  return {img(e.src), e.src_port, img(e.tgt), e.tgt_port};
}

// Backtracking matcher over the joint structure of a (boxes 0..na-1) and b
// (boxes na..na+nb-1).
class Matcher {
 public:
  Matcher(const Structure& s, int na, std::vector<int> colors)
      : s_(s), na_(na), colors_(std::move(colors)),
        map_(s.size(), kUnmapped), used_(s.size(), false) {}

  std::optional<std::vector<int>> run() {
    for (int v = 0; v < na_; ++v) {
      order_.push_back(v);
    }
    std::vector<int> class_size(s_.size(), 0);
    for (int v = na_; v < s_.size(); ++v) {
      ++class_size[colors_[v]];
    }
    std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
      return std::tie(class_size[colors_[x]], colors_[x]) <
             std::tie(class_size[colors_[y]], colors_[y]);
    });
    if (!extend(0)) {
      return std::nullopt;
    }
    return std::vector<int>(map_.begin(), map_.begin() + na_);
  }

 private:
  static constexpr int kUnmapped = -2;

  // Wires at u whose other end is outer or already placed, mapped through
  // `img` into keys comparable across the two sides.
  std::vector<WireKey> settled(int u, bool left) const {
    std::vector<WireKey> out;
    for (int k : s_.incident[u]) {
      const Edge& e = s_.edges[k];
      const int other = e.src == u ? e.tgt : e.src;
      if (other != kOuter && other != u) {
        const bool placed = left ? map_[other] != kUnmapped : used_[other];
        if (!placed) {
          continue;
        }
      }
      if (left) {
        out.push_back(key_under(e, map_));
      } else {
        out.push_back({e.src, e.src_port, e.tgt, e.tgt_port});
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) {
      return true;
    }
    const int u = order_[depth];
    for (int c = na_; c < s_.size(); ++c) {
      if (used_[c] || colors_[c] != colors_[u]) {
        continue;
      }
      map_[u] = c;
      used_[c] = true;
      if (settled(u, true) == settled(c, false) && extend(depth + 1)) {
        return true;
      }
      map_[u] = kUnmapped;
      used_[c] = false;
    }
    return false;
  }

  const Structure& s_;
  int na_;
  std::vector<int> colors_;
  std::vector<int> map_;
  std::vector<bool> used_;
  std::vector<int> order_;
};

std::vector<WireKey> pass_through(const Structure& s) {
  std::vector<WireKey> out;
  for (const auto& e : s.edges) {
    if (e.src == kOuter && e.tgt == kOuter) {
      out.push_back({e.src, e.src_port, e.tgt, e.tgt_port});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<BoxBijection> find_isomorphism(const WiringDiagram& a,
                                             const WiringDiagram& b) {
  if (a.mode() != b.mode()) {
    throw Error(ErrorKind::ModeMismatch,
                "cannot compare a " + std::string(to_string(a.mode())) +
                    " diagram with a " + std::string(to_string(b.mode())) +
                    " one");
  }
  if (a.input_types() != b.input_types() ||
      a.output_types() != b.output_types() ||
      a.box_count() != b.box_count() ||
      a.wires().size() != b.wires().size()) {
    return std::nullopt;
  }
  Structure sa;
  sa.add(a);
  Structure sb;
  sb.add(b);
  if (pass_through(sa) != pass_through(sb)) {
    return std::nullopt;
  }
  Structure joint;
  joint.add(a);
  joint.add(b);
  const int na = static_cast<int>(a.box_count());
  const auto colors = refine(joint, initial_colors(joint));
  std::vector<int> left(colors.begin(), colors.begin() + na);
  std::vector<int> right(colors.begin() + na, colors.end());
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  if (left != right) {
    return std::nullopt;
  }
  auto map = Matcher(joint, na, colors).run();
  if (!map) {
    return std::nullopt;
  }
  BoxBijection out;
  for (int v = 0; v < na; ++v) {
    out.emplace(v + kFirstBoxId, (*map)[v] - na + kFirstBoxId);
  }
  return out;
}

bool is_equal(const WiringDiagram& a, const WiringDiagram& b) {
  return find_isomorphism(a, b).has_value();
}

// Canonical labeling --------------------------------------------------------

namespace {

class Canonizer {
 public:
  explicit Canonizer(const Structure& s) : s_(s) {}

  std::vector<int> run() {
    auto colors = refine(s_, initial_colors(s_));
    std::vector<int> prefix;
    search(colors, prefix);
    return best_labeling_;
  }

 private:
  std::vector<WireKey> certificate(const std::vector<int>& labeling) const {
    std::vector<WireKey> out;
    out.reserve(s_.edges.size());
    for (const auto& e : s_.edges) {
      out.push_back(key_under(e, labeling));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Orbit representatives of `cell` under the stored automorphisms that fix
  // every individualized vertex.
  std::vector<int> representatives(const std::vector<int>& cell,
                                   const std::vector<int>& prefix) const {
    std::vector<int> parent(s_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](int v) { return gamma[v] == v; });
      if (!fixes) {
        continue;
      }
      for (int v = 0; v < s_.size(); ++v) {
        parent[find(v)] = find(gamma[v]);
      }
    }
    std::vector<int> reps;
    std::set<int> seen;
    for (int v : cell) {
      if (seen.insert(find(v)).second) {
        reps.push_back(v);
      }
    }
    return reps;
  }

  void search(const std::vector<int>& colors, std::vector<int>& prefix) {
    std::map<int, std::vector<int>> cells;
    for (int v = 0; v < s_.size(); ++v) {
      cells[colors[v]].push_back(v);
    }
    const std::vector<int>* target = nullptr;
    for (const auto& [c, members] : cells) {
      if (members.size() > 1 &&
          (target == nullptr || members.size() < target->size())) {
        target = &members;
      }
    }
    if (target == nullptr) {
      leaf(colors);
      return;
    }
    const std::vector<int> cell = *target;
    for (std::size_t idx = 0; idx < cell.size(); ++idx) {
      // Re-derive representatives each time: automorphisms found in earlier
      // branches may merge orbits.
      const auto reps = representatives(cell, prefix);
      const int v = cell[idx];
      if (std::find(reps.begin(), reps.end(), v) == reps.end()) {
        continue;
      }
      std::vector<std::vector<int>> keys(s_.size());
      for (int u = 0; u < s_.size(); ++u) {
        keys[u] = {colors[u], colors[u] == colors[v] && u != v ? 1 : 0};
      }
      prefix.push_back(v);
      search(refine(s_, rank_of(keys)), prefix);
      prefix.pop_back();
    }
  }

  void leaf(const std::vector<int>& colors) {
    // Discrete partition: color rank is the new position.
    auto cert = certificate(colors);
    if (best_labeling_.empty() || cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_labeling_ = colors;
      return;
    }
    if (cert == best_cert_) {
      // colors^-1 . best maps this leaf onto the best one: an automorphism.
      std::vector<int> inverse(s_.size());
      for (int v = 0; v < s_.size(); ++v) {
        inverse[colors[v]] = v;
      }
      std::vector<int> gamma(s_.size());
      for (int v = 0; v < s_.size(); ++v) {
        gamma[v] = inverse[best_labeling_[v]];
      }
      automorphisms_.push_back(std::move(gamma));
    }
  }

  const Structure& s_;
  std::vector<int> best_labeling_;
  std::vector<WireKey> best_cert_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

WiringDiagram relabel_boxes(const WiringDiagram& d,
                            const std::vector<int>& perm) {
  const std::size_t n = d.box_count();
  if (perm.size() != n) {
    throw Error(ErrorKind::IndexOutOfRange, "relabeling has the wrong size");
  }
  std::vector<const Box*> placed(n, nullptr);
  for (std::size_t k = 0; k < n; ++k) {
    if (perm[k] < 0 || static_cast<std::size_t>(perm[k]) >= n ||
        placed[perm[k]] != nullptr) {
      throw Error(ErrorKind::IndexOutOfRange, "relabeling is not a bijection");
    }
    placed[perm[k]] = &d.boxes()[k];
  }
  WiringDiagram out(d.input_types(), d.output_types(), d.mode());
  for (const Box* b : placed) {
    out.add_box(*b);
  }
  auto move = [&](PortRef r) {
    if (r.box >= kFirstBoxId) {
      r.box = perm[r.box - kFirstBoxId] + kFirstBoxId;
    }
    return r;
  };
  for (const auto& w : d.wires()) {
    out.add_wire_unchecked({move(w.source), move(w.target)});
  }
  return out;
}

CanonicalForm canonicalize(const WiringDiagram& d) {
  Structure s;
  s.add(d);
  const auto labeling = Canonizer(s).run();
  WiringDiagram relabeled = relabel_boxes(d, labeling);
  auto wires = relabeled.wires();
  std::sort(wires.begin(), wires.end());
  WiringDiagram out(d.input_types(), d.output_types(), d.mode());
  for (const auto& b : relabeled.boxes()) {
    out.add_box(b);
  }
  for (const auto& w : wires) {
    out.add_wire_unchecked(w);
  }
  std::vector<int> map(d.vertex_count() + 1, 0);
  map[kInputId] = kInputId;
  map[kOutputId] = kOutputId;
  for (std::size_t k = 0; k < labeling.size(); ++k) {
    map[k + kFirstBoxId] = labeling[k] + kFirstBoxId;
  }
  return {std::move(out), std::move(map)};
}

namespace {

class Fnv1a {
 public:
  void add(std::string_view s) {
    for (unsigned char c : s) {
      h_ ^= c;
      h_ *= 0x100000001b3ULL;
    }
    h_ ^= 0xff;  // separator
    h_ *= 0x100000001b3ULL;
  }
  void add(int v) { add(std::to_string(v)); }
  [[nodiscard]] std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

}  // namespace

std::uint64_t invariant_hash(const WiringDiagram& d) {
  const auto canon = canonicalize(d).diagram;
  Fnv1a h;
  h.add(to_string(canon.mode()));
  h.add(to_string(canon.input_types()));
  h.add(to_string(canon.output_types()));
  for (const auto& b : canon.boxes()) {
    h.add(b.value);
    h.add(to_string(b.inputs));
    h.add(to_string(b.outputs));
  }
  for (const auto& w : canon.wires()) {
    h.add(w.source.box);
    h.add(w.source.port);
    h.add(w.target.box);
    h.add(w.target.port);
  }
  return h.value();
}

}  // namespace wdalg

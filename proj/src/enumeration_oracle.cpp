#include "modop/enumeration_oracle.hpp"

#include <functional>
#include <stdexcept>

namespace modop {

namespace {

struct Walker {
  int n = 0;           // half-edges
  int tails = 0;       // the last `tails` half-edges are fixed by sigma
  std::vector<int> sigma;
  std::vector<int> rho;
  std::vector<char> used;
  CycleMode mode;
  std::map<std::pair<int, int>, Integer> weighted;  // sum of |Aut| (times n!)

  int find(std::vector<int>& p, int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }

  void evaluate() {
    // connectivity
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    for (int h = 0; h < n; ++h) {
      parent[find(parent, h)] = find(parent, sigma[h]);
      parent[find(parent, h)] = find(parent, rho[h]);
    }
    for (int h = 1; h < n; ++h) {
      if (find(parent, h) != find(parent, 0)) return;
    }
    // vertices and faces
    auto cycles = [&](const std::vector<int>& p, std::vector<int>& id) {
      id.assign(n, -1);
      int count = 0;
      for (int h = 0; h < n; ++h) {
        if (id[h] >= 0) continue;
        for (int x = h; id[x] < 0; x = p[x]) id[x] = count;
        ++count;
      }
      return count;
    };
    std::vector<int> phi(n);
    for (int h = 0; h < n; ++h) phi[h] = rho[sigma[h]];
    std::vector<int> vid, fid;
    const int v = cycles(rho, vid);
    const int f = cycles(phi, fid);
    const int e = (n - tails) / 2;
    const int two_g = 2 - v + e - f;
    if (two_g < 0 || two_g % 2 != 0) throw std::logic_error("oracle: bad genus");

    // automorphisms: commute with sigma and rho, fix tails (and faces)
    int aut = 0;
    std::vector<int> image(n);
    for (int target = 0; target < n; ++target) {
      std::fill(image.begin(), image.end(), -1);
      std::vector<int> stack{0};
      image[0] = target;
      bool ok = true;
      while (ok && !stack.empty()) {
        const int h = stack.back();
        stack.pop_back();
        const int pairs[2][2] = {{sigma[h], sigma[image[h]]}, {rho[h], rho[image[h]]}};
        for (const auto& pr : pairs) {
          if (image[pr[0]] < 0) {
            image[pr[0]] = pr[1];
            stack.push_back(pr[0]);
          } else if (image[pr[0]] != pr[1]) {
            ok = false;
          }
        }
      }
      if (!ok) continue;
      std::vector<char> hit(n, 0);
      for (int h = 0; h < n && ok; ++h) {
        if (hit[image[h]]) ok = false;
        hit[image[h]] = 1;
        if (sigma[h] == h && image[h] != h) ok = false;
        if (mode == CycleMode::Labeled && fid[image[h]] != fid[h]) ok = false;
      }
      if (ok) ++aut;
    }
    Integer w = aut;
    if (mode == CycleMode::Labeled) {
      for (int k = 2; k <= f; ++k) w *= k;
    }
    weighted[{two_g / 2, f}] += w;
  }

  // Builds rho cycle by cycle; each cycle starts at its smallest element.
  void extend() {
    int first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) {
      evaluate();
      return;
    }
    used[first] = 1;
    std::vector<int> cyc{first};
    std::function<void()> grow = [&]() {
      if (cyc.size() >= 3) {
        for (std::size_t i = 0; i < cyc.size(); ++i) rho[cyc[i]] = cyc[(i + 1) % cyc.size()];
        extend();
      }
      for (int x = first + 1; x < n; ++x) {
        if (used[x]) continue;
        used[x] = 1;
        cyc.push_back(x);
        grow();
        cyc.pop_back();
        used[x] = 0;
      }
    };
    grow();
    used[first] = 0;
  }
};

}  // namespace

std::map<std::pair<int, int>, Integer> oracle_class_counts(
    int edges, const std::vector<Label>& legs, CycleMode mode) {
  const int n = 2 * edges + static_cast<int>(legs.size());
  if (edges < 0) throw std::invalid_argument("negative edge count");
  if (n > kOracleMaxHalfEdges) {
    throw std::length_error("oracle is limited to " +
                            std::to_string(kOracleMaxHalfEdges) + " half-edges");
  }
  Walker w;
  w.n = n;
  w.tails = static_cast<int>(legs.size());
  w.mode = mode;
  w.sigma.resize(n);
  for (int e = 0; e < edges; ++e) {
    w.sigma[2 * e] = 2 * e + 1;
    w.sigma[2 * e + 1] = 2 * e;
  }
  for (int t = 2 * edges; t < n; ++t) w.sigma[t] = t;
  w.rho.assign(n, -1);
  w.used.assign(n, 0);
  if (n > 0) w.extend();

  // |centralizer of sigma fixing the tails| = 2^E E!
  Integer group = 1;
  for (int k = 1; k <= edges; ++k) group *= 2 * k;
  std::map<std::pair<int, int>, Integer> out;
  for (const auto& [key, sum] : w.weighted) {
    if (sum % group != 0) throw std::logic_error("oracle: non-integral class count");
    out[key] = sum / group;
  }
  return out;
}

Integer oracle_enumerate(const ComplexType& t, int edges) {
  if (!is_stable(t)) return 0;
  const auto counts = oracle_class_counts(edges, t.legs, t.mode);
  auto it = counts.find({t.genus, t.boundaries});
  return it == counts.end() ? Integer(0) : it->second;
}

}  // namespace modop

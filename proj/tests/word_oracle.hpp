// Independent brute-force oracles used only by the test suites. They work at
// the level of words and exact reflection vectors, not through the orbit
// machinery they are checking.
#pragma once

#include <deque>
#include <functional>
#include <map>
#include <stdexcept>
#include <set>
#include <string>
#include <vector>

#include "twotrans/coxeter.hpp"

namespace twotrans::oracle {

inline std::string key_of(const std::vector<AlgebraicScalar>& v) {
  std::string k;
  for (const auto& s : v) {
    k += s.to_string();
    k += '|';
  }
  return k;
}

/// Number of group elements, by breadth-first closure of the orbit of the
/// strictly dominant vector rho under the exact reflection action.
inline long long bfs_group_size(const CoxeterDiagram& d,
                                long long cap = 2000000) {
  int n = d.rank();
  std::vector<AlgebraicScalar> rho(n, AlgebraicScalar(1));
  std::map<std::string, int> seen;
  std::deque<std::vector<AlgebraicScalar>> queue{rho};
  seen.emplace(key_of(rho), 0);
  long long count = 0;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    ++count;
    if (count > cap) throw std::runtime_error("oracle cap exceeded");
    for (int i = 0; i < n; ++i) {
      auto img = simple_reflection(d, i, v);
      if (seen.emplace(key_of(img), 0).second) queue.push_back(std::move(img));
    }
  }
  return count;
}

/// Longest element length = eccentricity of rho in its orbit graph.
inline int bfs_longest_length(const CoxeterDiagram& d) {
  int n = d.rank();
  std::vector<AlgebraicScalar> rho(n, AlgebraicScalar(1));
  std::map<std::string, int> dist;
  std::deque<std::vector<AlgebraicScalar>> queue{rho};
  dist.emplace(key_of(rho), 0);
  int longest = 0;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    int dv = dist.at(key_of(v));
    longest = std::max(longest, dv);
    for (int i = 0; i < n; ++i) {
      auto img = simple_reflection(d, i, v);
      if (dist.emplace(key_of(img), dv + 1).second) queue.push_back(std::move(img));
    }
  }
  return longest;
}

/// Number of positive roots, from the closure of the simple roots under the
/// exact reflection action in root coordinates.
inline long long positive_root_count(const CoxeterDiagram& d) {
  const CartanData& cd = cartan_data(d);
  int n = d.rank();
  auto reflect_root = [&](int t, std::vector<AlgebraicScalar> r) {
    AlgebraicScalar acc(0);
    for (int j = 0; j < n; ++j) acc += cd.entry(t, j) * r[j];
    r[t] -= acc;
    return r;
  };
  std::map<std::string, std::vector<AlgebraicScalar>> all;
  std::deque<std::vector<AlgebraicScalar>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<AlgebraicScalar> e(n, AlgebraicScalar(0));
    e[i] = AlgebraicScalar(1);
    all.emplace(key_of(e), e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto r = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      auto img = reflect_root(i, r);
      if (all.emplace(key_of(img), img).second) queue.push_back(std::move(img));
    }
  }
  long long positives = 0;
  for (const auto& [k, r] : all) {
    bool nonneg = true;
    for (const auto& c : r)
      if (c.sign() < 0) nonneg = false;
    if (nonneg) ++positives;
  }
  return positives;
}

/// Lexicographically least reduced word of the element of a reduced word,
/// computed purely by descent tests on words.
inline Word lex_normal_form(const CoxeterDiagram& d, Word w) {
  Word nf;
  while (!w.empty()) {
    int len = static_cast<int>(w.size());
    int pick = -1;
    for (int s = 0; s < d.rank(); ++s) {
      Word probe;
      probe.push_back(s);
      probe.insert(probe.end(), w.begin(), w.end());
      if (element_length(d, probe) < len) {
        pick = s;
        break;
      }
    }
    if (pick < 0) throw std::logic_error("nonempty word with no left descent");
    nf.push_back(pick);
    Word product;
    product.push_back(pick);
    product.insert(product.end(), w.begin(), w.end());
    w = reduced_word(d, product);
  }
  return nf;
}

/// All group elements as canonical words (word-level breadth-first search).
inline std::vector<Word> enumerate_elements(const CoxeterDiagram& d,
                                            long long cap = 100000) {
  std::set<Word> seen;
  std::vector<Word> frontier{Word{}};
  std::vector<Word> all{Word{}};
  seen.insert(Word{});
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const auto& u : frontier) {
      for (int s = 0; s < d.rank(); ++s) {
        Word cand = u;
        cand.push_back(s);
        if (element_length(d, cand) != static_cast<int>(cand.size())) continue;
        Word nf = lex_normal_form(d, cand);
        if (seen.insert(nf).second) {
          next.push_back(nf);
          all.push_back(nf);
          if (static_cast<long long>(all.size()) > cap)
            throw std::runtime_error("oracle cap exceeded");
        }
      }
    }
    frontier = std::move(next);
  }
  return all;
}

/// Number of (W_J, W_J) double cosets for the corank-one parabolic omitting
/// `node`, computed entirely from words: group elements are reduced to their
/// minimal coset representatives and fused under left parabolic translation.
inline long long word_level_double_coset_count(const CoxeterDiagram& d,
                                               int node) {
  auto elements = enumerate_elements(d);

  auto min_coset_rep = [&](Word w) {
    // strip right descents lying in the parabolic
    bool changed = true;
    while (changed) {
      changed = false;
      int len = static_cast<int>(w.size());
      for (int j = 0; j < d.rank(); ++j) {
        if (j == node) continue;
        Word probe = w;
        probe.push_back(j);
        if (element_length(d, probe) < len) {
          w = reduced_word(d, probe);
          changed = true;
          break;
        }
      }
    }
    return lex_normal_form(d, w);
  };

  std::map<Word, int> rep_id;
  std::vector<Word> reps;
  for (const auto& w : elements) {
    Word rep = min_coset_rep(w);
    if (rep_id.emplace(rep, static_cast<int>(reps.size())).second)
      reps.push_back(rep);
  }

  // union-find over coset representatives under left multiplication by the
  // parabolic generators
  std::vector<int> parent(reps.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < reps.size(); ++i) {
    for (int j = 0; j < d.rank(); ++j) {
      if (j == node) continue;
      Word moved;
      moved.push_back(j);
      moved.insert(moved.end(), reps[i].begin(), reps[i].end());
      Word rep = min_coset_rep(reduced_word(d, moved));
      int other = rep_id.at(rep);
      int a = find(static_cast<int>(i)), b = find(other);
      if (a != b) parent[b] = a;
    }
  }
  std::set<int> roots;
  for (size_t i = 0; i < reps.size(); ++i) roots.insert(find(static_cast<int>(i)));
  return static_cast<long long>(roots.size());
}

}  // namespace twotrans::oracle

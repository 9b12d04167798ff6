#include "ckdim/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ckdim/errors.hpp"

namespace ckdim {

namespace {

// Incremental exact row echelon span. Pivot = smallest key of a row.
template <class K>
class RowSpan {
 public:
  // Reduces row against the span in place; empty result means membership.
  void reduce(std::map<K, Rat>& row) const {
    for (const auto& [pivot, basis_row] : rows_) {
      auto hit = row.find(pivot);
      if (hit == row.end()) continue;
      const Rat factor = hit->second / basis_row.begin()->second;
      for (const auto& [k, v] : basis_row) {
        Rat& slot = row[k];
        slot -= factor * v;
        if (slot == 0) row.erase(k);
      }
    }
  }

  bool insert(std::map<K, Rat> row) {
    reduce(row);
    if (row.empty()) return false;
    K pivot = row.begin()->first;
    rows_.emplace(std::move(pivot), std::move(row));
    return true;
  }

  size_t rank() const { return rows_.size(); }
  const std::map<K, std::map<K, Rat>>& rows() const { return rows_; }

 private:
  std::map<K, std::map<K, Rat>> rows_;
};

void check_ideal_feasible(int m, long N) {
  if (m < 1 || m > kMaxIdealAlphabet)
    throw FeasibilityError("ideal computation: alphabet size beyond envelope", kMaxIdealAlphabet);
  if (N < 1 || N > kMaxIdealDegree)
    throw FeasibilityError("ideal computation: max degree beyond envelope (max N = " +
                               std::to_string(kMaxIdealDegree) + ")",
                           kMaxIdealDegree);
}

}  // namespace

GradedIdealBasis ideal_basis(const std::vector<LieVector>& generators, int m, long N) {
  check_ideal_feasible(m, N);
  for (const auto& gen : generators) {
    if (gen.degree < 1) throw std::invalid_argument("ideal_basis: generators must be homogeneous of degree >= 1");
  }
  GradedIdealBasis out;
  out.alphabet = m;
  out.per_degree.resize(static_cast<size_t>(N));
  std::vector<LieVector> prev;
  for (long n = 1; n <= N; ++n) {
    RowSpan<Word> span;
    std::vector<LieVector> basis_n;
    auto add = [&](const LieVector& v) {
      if (v.degree != n) throw std::logic_error("ideal_basis: degree mismatch");
      std::map<Word, Rat> row = v.coords;
      span.reduce(row);
      if (row.empty()) return;
      LieVector reduced{n, row};
      basis_n.push_back(reduced);
      span.insert(std::move(row));
    };
    for (const auto& gen : generators) {
      if (gen.degree == n) add(gen);
    }
    for (const auto& v : prev) {
      for (int letter = 1; letter <= m; ++letter) {
        add(bracket(v, lie_basis_vector(Word(1, static_cast<char>('0' + letter)))));
      }
    }
    out.per_degree[static_cast<size_t>(n - 1)] = basis_n;
    prev = std::move(basis_n);
  }
  return out;
}

GradedDims ideal_graded_dims(const std::vector<LieVector>& generators, int m, long N) {
  GradedIdealBasis basis = ideal_basis(generators, m, N);
  GradedDims out;
  for (const auto& degree_basis : basis.per_degree) out.dims.push_back(Int(degree_basis.size()));
  return out;
}

LieVector surface_relator(int g) {
  if (g < 2 || 2 * g > kMaxAlphabet) throw std::invalid_argument("surface_relator: need 2 <= g <= 4");
  LieVector r;
  for (int i = 0; i < g; ++i) {
    Word a(1, static_cast<char>('0' + 2 * i + 1));
    Word b(1, static_cast<char>('0' + 2 * i + 2));
    r += bracket_words(a, b);
  }
  return r;
}

GradedDims surface_dims_oracle(int g, long N) {
  if (g < 2) throw std::invalid_argument("surface_dims_oracle: need g >= 2");
  if (2 * g > kMaxIdealAlphabet)
    throw FeasibilityError("surface_dims_oracle: 2g exceeds the ideal-oracle alphabet",
                           kMaxIdealAlphabet / 2);
  GradedDims ideal = ideal_graded_dims({surface_relator(g)}, 2 * g, N);
  GradedDims out;
  for (long n = 1; n <= N; ++n) out.dims.push_back(witt_dim(2 * g, n) - ideal.at(n));
  return out;
}

namespace {

// Left-normed metabelian monomial [x_a, x_b, x_{t_1}, ...] stored as
// [a, b, t...] with a > b <= t_1 <= t_2 <= ...; degree-1 monomials are [a].
using MetabMono = std::vector<int>;
using MetabVec = std::map<MetabMono, Rat>;

void metab_add(MetabVec& acc, const MetabMono& mono, const Rat& coeff) {
  Rat& slot = acc[mono];
  slot += coeff;
  if (slot == 0) acc.erase(mono);
}

MetabMono with_tail_letter(const MetabMono& mono, int head_a, int head_b, int extra) {
  MetabMono out;
  out.reserve(mono.size() + 1);
  out.push_back(head_a);
  out.push_back(head_b);
  for (size_t i = 2; i < mono.size(); ++i) out.push_back(mono[i]);
  out.push_back(extra);
  std::sort(out.begin() + 2, out.end());
  return out;
}

// [mono, x_j] rewritten to the normal form. Tail letters commute; a
// head [x_a, x_b] with j < b is rewritten by Jacobi.
MetabVec metab_bracket_gen(const MetabMono& mono, int j) {
  MetabVec out;
  if (mono.size() == 1) {
    int a = mono[0];
    if (a == j) return out;
    if (a > j)
      metab_add(out, {a, j}, 1);
    else
      metab_add(out, {j, a}, -1);
    return out;
  }
  const int a = mono[0], b = mono[1];
  if (j >= b) {
    MetabMono grown = mono;
    grown.push_back(j);
    std::sort(grown.begin() + 2, grown.end());
    metab_add(out, grown, 1);
  } else {
    // [[x_a,x_b],x_j,T] = [[x_a,x_j],x_b,T] - [[x_b,x_j],x_a,T]
    metab_add(out, with_tail_letter(mono, a, j, b), 1);
    metab_add(out, with_tail_letter(mono, b, j, a), -1);
  }
  return out;
}

Int metab_basis_count(int m, long n) {
  if (n == 1) return m;
  Int total = 0;
  for (int b = 1; b <= m; ++b) {
    // head a > b, tail: multiset of size n-2 from {b..m}
    total += Int(m - b) * binomial((m - b + 1) + (n - 2) - 1, n - 2);
  }
  return total;
}

// Image of a homogeneous degree-2 free-Lie element in the metabelian basis.
MetabVec metab_image_degree2(const LieVector& relator) {
  if (relator.degree != 2)
    throw std::invalid_argument("metabelian oracle: only degree-2 relators are supported");
  MetabVec out;
  for (const auto& [w, c] : relator.coords) {
    // Lyndon word "xy" (x < y) is [x_x, x_y] = -[x_y, x_x]
    int x = w[0] - '0', y = w[1] - '0';
    metab_add(out, {y, x}, -c);
  }
  return out;
}

void check_metab_feasible(int m, long N) {
  if (m < 1 || m > kMaxMetabelianAlphabet)
    throw FeasibilityError("metabelian oracle: alphabet size beyond envelope", kMaxMetabelianAlphabet);
  if (N < 1 || N > kMaxMetabelianDegree)
    throw FeasibilityError("metabelian oracle: max degree beyond envelope (max N = " +
                               std::to_string(kMaxMetabelianDegree) + ")",
                           kMaxMetabelianDegree);
}

}  // namespace

GradedDims metabelian_dims_oracle(int m, long N, const std::optional<LieVector>& relator) {
  check_metab_feasible(m, N);
  std::vector<Int> ideal_rank(static_cast<size_t>(N + 1), Int(0));
  if (relator) {
    std::vector<MetabVec> prev;
    MetabVec image = metab_image_degree2(*relator);
    if (!image.empty() && N >= 2) {
      RowSpan<MetabMono> span;
      span.insert(image);
      prev.push_back(std::move(image));
      ideal_rank[2] = 1;
    }
    for (long n = 3; n <= N; ++n) {
      RowSpan<MetabMono> span;
      std::vector<MetabVec> basis_n;
      for (const auto& v : prev) {
        for (int j = 1; j <= m; ++j) {
          MetabVec row;
          for (const auto& [mono, c] : v) {
            for (const auto& [mono2, c2] : metab_bracket_gen(mono, j)) metab_add(row, mono2, c * c2);
          }
          span.reduce(row);
          if (!row.empty()) {
            basis_n.push_back(row);
            span.insert(std::move(row));
          }
        }
      }
      ideal_rank[static_cast<size_t>(n)] = Int(basis_n.size());
      prev = std::move(basis_n);
    }
  }
  GradedDims out;
  for (long n = 1; n <= N; ++n)
    out.dims.push_back(metab_basis_count(m, n) - ideal_rank[static_cast<size_t>(n)]);
  return out;
}

GradedDims surface_metabelian_dims_oracle(int g, long N) {
  if (g < 2) throw std::invalid_argument("surface_metabelian_dims_oracle: need g >= 2");
  if (2 * g > kMaxMetabelianAlphabet)
    throw FeasibilityError("surface metabelian oracle: genus beyond envelope", kMaxMetabelianAlphabet / 2);
  return metabelian_dims_oracle(2 * g, N, surface_relator(g));
}

GradedDims bigraded_truncation_dims_oracle(long N) {
  if (N < 1 || N > kMaxBracketDegree)
    throw FeasibilityError("bigraded truncation oracle: max degree beyond envelope (max N = " +
                               std::to_string(kMaxBracketDegree) + ")",
                           kMaxBracketDegree);
  auto killed = [](const Word& w) {
    long ones = std::count(w.begin(), w.end(), '1');
    long twos = std::count(w.begin(), w.end(), '2');
    return ones >= 2 && twos >= 2;
  };
  GradedDims out;
  for (long n = 1; n <= N; ++n) {
    Int survivors = 0;
    for (const auto& w : lyndon_words(2, static_cast<int>(n)))
      if (!killed(w)) ++survivors;
    out.dims.push_back(survivors);
  }
  // Closure check: bracketing a killed basis element with a generator
  // must stay inside the killed span.
  for (long n = 2; n < N; ++n) {
    for (const auto& w : lyndon_words(2, static_cast<int>(n))) {
      if (!killed(w)) continue;
      for (const char* gen : {"1", "2"}) {
        LieVector br = bracket_words(w, Word(gen));
        for (const auto& [support_word, c] : br.coords) {
          if (!killed(support_word))
            throw std::logic_error("bigraded truncation: killed span is not an ideal");
        }
      }
    }
  }
  return out;
}

}  // namespace ckdim

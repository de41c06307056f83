#include "hopfcode/enumerate.hpp"

#include <algorithm>
#include <cstring>
#include <string>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hopfcode {

namespace {

// Raw mod-p view of the algebra: right-multiplication tables as flat
// uint32 arrays so the inner loops never touch generic scalars.
struct PrimeView {
  std::uint32_t p = 0;
  std::size_t dim = 0;
  // rmul[k][i * dim + j] = j-th coordinate of basis_i * basis_k
  std::vector<std::vector<std::uint32_t>> rmul;
};

PrimeView make_prime_view(const StructureAlgebra& alg) {
  PrimeView v;
  v.p = static_cast<std::uint32_t>(alg.field().modulus());
  v.dim = alg.dim();
  v.rmul.assign(v.dim, std::vector<std::uint32_t>(v.dim * v.dim, 0));
  for (std::size_t k = 0; k < v.dim; ++k)
    for (std::size_t i = 0; i < v.dim; ++i) {
      const auto& prod = alg.product_coords(i, k);
      for (std::size_t j = 0; j < v.dim; ++j)
        v.rmul[k][i * v.dim + j] =
            static_cast<std::uint32_t>(prod[j].residue());
    }
  return v;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

// Reduced row echelon basis over GF(p) on preallocated flat storage, rows
// kept sorted by pivot column. Reused across the hot loops so the kernels
// stay allocation-free.
struct FlatRref {
  std::uint32_t p = 0;
  std::size_t dim = 0;
  std::size_t nrows = 0;
  std::vector<std::uint32_t> rows;    // dim * dim
  std::vector<std::size_t> pivots;    // dim

  void init(std::uint32_t prime, std::size_t d) {
    p = prime;
    dim = d;
    rows.assign(d * d, 0);
    pivots.assign(d, 0);
    nrows = 0;
  }
  void clear() { nrows = 0; }
  const std::uint32_t* row(std::size_t r) const { return &rows[r * dim]; }

  // Reduces v in place against the basis; returns pivot column or dim.
  std::size_t reduce(std::uint32_t* v) const {
    for (std::size_t r = 0; r < nrows; ++r) {
      std::uint32_t c = v[pivots[r]];
      if (c == 0) continue;
      const std::uint32_t* br = row(r);
      const std::uint64_t f = p - c;
      for (std::size_t j = pivots[r]; j < dim; ++j)
        v[j] = static_cast<std::uint32_t>((v[j] + f * br[j]) % p);
    }
    for (std::size_t j = 0; j < dim; ++j)
      if (v[j] != 0) return j;
    return dim;
  }

  // Inserts v (reduced, nonzero, pivot at piv), keeping canonical form.
  void insert(const std::uint32_t* v, std::size_t piv) {
    std::uint32_t scaled[64];
    const std::uint64_t inv = inv_mod(v[piv], p);
    for (std::size_t j = 0; j < dim; ++j)
      scaled[j] = static_cast<std::uint32_t>(v[j] * inv % p);
    for (std::size_t r = 0; r < nrows; ++r) {
      std::uint32_t c = rows[r * dim + piv];
      if (c == 0) continue;
      const std::uint64_t f = p - c;
      for (std::size_t j = piv; j < dim; ++j)
        rows[r * dim + j] = static_cast<std::uint32_t>(
            (rows[r * dim + j] + f * scaled[j]) % p);
    }
    std::size_t pos = 0;
    while (pos < nrows && pivots[pos] < piv) ++pos;
    std::memmove(&rows[(pos + 1) * dim], &rows[pos * dim],
                 (nrows - pos) * dim * sizeof(std::uint32_t));
    std::memmove(&pivots[pos + 1], &pivots[pos],
                 (nrows - pos) * sizeof(std::size_t));
    std::memcpy(&rows[pos * dim], scaled, dim * sizeof(std::uint32_t));
    pivots[pos] = piv;
    ++nrows;
  }

  std::string signature() const {
    return std::string(reinterpret_cast<const char*>(rows.data()),
                       nrows * dim * sizeof(std::uint32_t));
  }

  void feed_signature(const std::string& sig, std::uint32_t* scratch) {
    const std::size_t bytes = dim * sizeof(std::uint32_t);
    const std::size_t count = sig.size() / bytes;
    for (std::size_t r = 0; r < count; ++r) {
      std::memcpy(scratch, sig.data() + r * bytes, bytes);
      std::size_t piv = reduce(scratch);
      if (piv != dim) insert(scratch, piv);
    }
  }
};

// Per-thread scratch for the closure and sum kernels.
struct Workspace {
  FlatRref basis;
  std::vector<std::uint32_t> pending;  // stack of rows
  std::vector<std::uint32_t> scratch;  // one row

  void init(const PrimeView& pv) {
    basis.init(pv.p, pv.dim);
    pending.reserve(pv.dim * pv.dim * pv.dim);
    scratch.assign(pv.dim, 0);
  }
};

// v * basis_k into out.
void mul_basis(const PrimeView& pv, const std::uint32_t* v, std::size_t k,
               std::uint32_t* out) {
  std::memset(out, 0, pv.dim * sizeof(std::uint32_t));
  const auto& tab = pv.rmul[k];
  for (std::size_t i = 0; i < pv.dim; ++i) {
    std::uint64_t c = v[i];
    if (c == 0) continue;
    const std::uint32_t* trow = &tab[i * pv.dim];
    for (std::size_t j = 0; j < pv.dim; ++j)
      if (trow[j])
        out[j] = static_cast<std::uint32_t>((out[j] + c * trow[j]) % pv.p);
  }
}

// Right-ideal closure of a single seed vector, as a canonical signature.
std::string cyclic_closure_signature(const PrimeView& pv, Workspace& ws,
                                     const std::uint32_t* seed) {
  ws.basis.clear();
  ws.pending.assign(seed, seed + pv.dim);
  while (!ws.pending.empty()) {
    std::uint32_t v[64];
    std::memcpy(v, ws.pending.data() + ws.pending.size() - pv.dim,
                pv.dim * sizeof(std::uint32_t));
    ws.pending.resize(ws.pending.size() - pv.dim);
    std::size_t piv = ws.basis.reduce(v);
    if (piv == pv.dim) continue;
    // Insertion-time snapshots jointly span the final space, so expanding
    // each snapshot under every basis multiplication suffices.
    ws.basis.insert(v, piv);
    for (std::size_t k = 0; k < pv.dim; ++k) {
      std::uint32_t prod[64];
      mul_basis(pv, v, k, prod);
      bool nonzero = false;
      for (std::size_t j = 0; j < pv.dim; ++j) nonzero |= prod[j] != 0;
      if (nonzero)
        ws.pending.insert(ws.pending.end(), prod, prod + pv.dim);
    }
  }
  return ws.basis.signature();
}

std::string sum_signature(Workspace& ws, const std::string& a,
                          const std::string& b) {
  ws.basis.clear();
  ws.basis.feed_signature(a, ws.scratch.data());
  ws.basis.feed_signature(b, ws.scratch.data());
  return ws.basis.signature();
}

Subspace signature_to_subspace(const Field& field, std::size_t dim,
                               const std::string& sig) {
  const std::size_t nrows = sig.size() / (dim * sizeof(std::uint32_t));
  Matrix m(field, nrows, dim);
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t j = 0; j < dim; ++j) {
      std::uint32_t x;
      std::memcpy(&x, sig.data() + (r * dim + j) * sizeof(std::uint32_t),
                  sizeof(std::uint32_t));
      m.at(r, j) = field.from_integer(static_cast<long long>(x));
    }
  return Subspace(dim, std::move(m));
}

void decode_vector(std::uint64_t index, std::uint32_t p, std::size_t dim,
                   std::uint32_t* out) {
  for (std::size_t j = 0; j < dim; ++j) {
    out[j] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
}

bool is_projective_representative(const std::uint32_t* v, std::size_t dim) {
  for (std::size_t j = 0; j < dim; ++j) {
    if (v[j] == 0) continue;
    return v[j] == 1;
  }
  return false;  // zero vector
}

void check_preconditions(const StructureAlgebra& alg, std::uint64_t budget,
                         std::uint64_t& total) {
  if (alg.field().kind() != FieldKind::prime)
    throw BudgetExceeded("exhaustive enumeration requires a prime field");
  if (alg.dim() > 60)
    throw BudgetExceeded("dimension too large for the enumeration kernel");
  const std::uint64_t p = alg.field().modulus();
  total = 1;
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    if (total > budget / p + 1)
      throw BudgetExceeded("p^dim exceeds the enumeration budget");
    total *= p;
    if (total > budget)
      throw BudgetExceeded("p^dim = " + std::to_string(total) +
                           " exceeds the enumeration budget " +
                           std::to_string(budget));
  }
}

// Distinct right-ideal closures of all projective coordinate vectors: the
// data-parallel kernel.
std::unordered_set<std::string> collect_cyclic(const PrimeView& pv,
                                               std::uint64_t total,
                                               bool parallel) {
  std::unordered_set<std::string> cyclic;
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel
    {
      Workspace ws;
      ws.init(pv);
      std::uint32_t v[64];
      std::unordered_set<std::string> local;
#pragma omp for schedule(dynamic, 4096)
      for (long long idx = 1; idx < static_cast<long long>(total); ++idx) {
        decode_vector(static_cast<std::uint64_t>(idx), pv.p, pv.dim, v);
        if (!is_projective_representative(v, pv.dim)) continue;
        local.insert(cyclic_closure_signature(pv, ws, v));
      }
#pragma omp critical(hopfcode_enumerate_merge)
      cyclic.merge(local);
    }
    return cyclic;
  }
#endif
  (void)parallel;
  Workspace ws;
  ws.init(pv);
  std::uint32_t v[64];
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    decode_vector(idx, pv.p, pv.dim, v);
    if (!is_projective_representative(v, pv.dim)) continue;
    cyclic.insert(cyclic_closure_signature(pv, ws, v));
  }
  return cyclic;
}

// Closes the cyclic set under sums. Every submodule is a sum of cyclic
// submodules, hence reachable by joining one cyclic generator at a time, so
// each frontier item only needs to be summed against the generators.
std::unordered_set<std::string> close_under_sums(
    const PrimeView& pv, std::unordered_set<std::string> seen,
    bool parallel) {
  const std::size_t full_bytes = pv.dim * pv.dim * sizeof(std::uint32_t);
  std::vector<std::string> generators(seen.begin(), seen.end());
  std::sort(generators.begin(), generators.end());
  std::vector<std::string> items = generators;
  std::size_t lo = 0;
  while (lo < items.size()) {
    const std::size_t hi = items.size();
    std::unordered_set<std::string> fresh;
    auto process = [&](const std::string& a, const std::string& b,
                       Workspace& ws,
                       std::unordered_set<std::string>& sink) {
      if (a.size() == full_bytes || b.size() == full_bytes) return;
      if (a.size() == 0 || b.size() == 0) return;
      sink.insert(sum_signature(ws, a, b));
    };
#ifdef _OPENMP
    if (parallel) {
      const long long pairs = static_cast<long long>(hi - lo) *
                              static_cast<long long>(generators.size());
#pragma omp parallel
      {
        Workspace ws;
        ws.init(pv);
        std::unordered_set<std::string> local;
#pragma omp for schedule(dynamic, 64)
        for (long long idx = 0; idx < pairs; ++idx) {
          std::size_t i = lo + static_cast<std::size_t>(idx) /
                                   generators.size();
          std::size_t j =
              static_cast<std::size_t>(idx) % generators.size();
          process(items[i], generators[j], ws, local);
        }
#pragma omp critical(hopfcode_sum_merge)
        fresh.merge(local);
      }
    } else
#endif
    {
      (void)parallel;
      Workspace ws;
      ws.init(pv);
      for (std::size_t i = lo; i < hi; ++i)
        for (const auto& g : generators) process(items[i], g, ws, fresh);
    }
    for (auto& s : fresh)
      if (seen.insert(s).second) items.push_back(s);
    lo = hi;
  }
  seen.insert(std::string());  // zero submodule
  return seen;
}

std::vector<RightSubmodule> run_enumeration(const StructureAlgebra& alg,
                                            std::uint64_t budget,
                                            bool parallel) {
  std::uint64_t total = 0;
  check_preconditions(alg, budget, total);
  PrimeView pv = make_prime_view(alg);
  std::unordered_set<std::string> cyclic =
      collect_cyclic(pv, total, parallel);
  std::unordered_set<std::string> seen =
      close_under_sums(pv, std::move(cyclic), parallel);
  std::vector<Subspace> spaces;
  spaces.reserve(seen.size());
  for (const auto& sig : seen)
    spaces.push_back(signature_to_subspace(alg.field(), alg.dim(), sig));
  std::sort(spaces.begin(), spaces.end(), Subspace::canonical_less);
  std::vector<RightSubmodule> out;
  out.reserve(spaces.size());
  for (auto& s : spaces) out.emplace_back(alg, std::move(s));
  return out;
}

}  // namespace

std::uint64_t default_enumeration_budget() { return 531441; }

std::vector<RightSubmodule> enumerate_right_submodules_serial(
    const StructureAlgebra& alg, std::uint64_t budget) {
  return run_enumeration(alg, budget, false);
}

std::vector<RightSubmodule> enumerate_right_submodules(
    const StructureAlgebra& alg, const EnumerationOptions& opts) {
  return run_enumeration(alg, opts.budget, opts.parallel);
}

}  // namespace hopfcode

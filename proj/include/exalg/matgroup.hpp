#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "exalg/linalg.hpp"

namespace exalg {
namespace grp {

/// Progress event for long-running constructions. Return false from the
/// callback to cancel (the construction throws Cancelled).
struct Progress {
    std::string phase;       // "closure", "orbit", "verify"
    long long count = 0;     // elements found / orbit size
    long long level = 0;     // chain level when applicable
};
using ProgressFn = std::function<bool(const Progress&)>;

/// Generating set of square invertible matrices over one field.
struct MatrixGroup {
    std::vector<Matrix> generators;
    static MatrixGroup from(std::vector<Matrix> gens);  // validates
    int dim() const { return generators.empty() ? 0 : generators[0].rows(); }
};

/// Fully enumerated finite group: canonical element keys plus compact
/// decode-on-demand storage of every element.
class GroupClosure {
  public:
    long long order() const { return (long long)keys_.size(); }
    bool contains(const Matrix& m) const { return pool_.count(m.key()) != 0; }
    Matrix element(size_t i) const;  // decoded copy
    const std::vector<Matrix>& generators() const { return gens_; }
    int dim() const { return dim_; }

  private:
    friend GroupClosure enumerate(const MatrixGroup&, long long, const ProgressFn&);
    friend GroupClosure closure_of(std::vector<Matrix> gens, long long limit,
                                   const ProgressFn& progress);
    // one stored copy per element: the set owns the canonical encodings,
    // keys_ records insertion order through stable node pointers
    std::unordered_set<std::string> pool_;
    std::vector<const std::string*> keys_;
    std::vector<Matrix> gens_;
    int dim_ = 0;
    void insert(const Matrix& m);
};

/// Dimino-style full enumeration; throws LimitExceeded (with the partial
/// count in detail_a) when the closure grows past `limit`.
GroupClosure enumerate(const MatrixGroup& g, long long limit, const ProgressFn& progress = {});

/// Derived subgroup of an enumerated group (normal closure of generator
/// commutators, fully enumerated).
GroupClosure derived_subgroup(const GroupClosure& c);

struct StructureDescriptor {
    long long order = 0;
    long long derived_order = 0;
    std::vector<long long> abelianization;  // invariant factors d1 | d2 | ...
    long long exponent = 0;
    std::optional<std::string> name;
};

/// Cheap-invariant identification for small enumerated groups (order <= 1e4):
/// names only when the invariants are decisive (cyclic / abelian / A4 / S3 /
/// S4 rules), otherwise name is absent.
StructureDescriptor identify_small(const GroupClosure& c);

/// Base-and-strong-generating-set certificate: stabilizer chain for the
/// action of matrices on column vectors.
class BSGSChain {
  public:
    struct Level {
        std::vector<Scalar> base_point;
        std::vector<std::vector<Scalar>> orbit;                 // points, BFS order
        std::unordered_map<std::string, uint32_t> orbit_index;  // key -> position
        std::vector<uint32_t> pred;      // Schreier vector: BFS predecessor
        std::vector<uint32_t> via_gen;   // generator index used from pred
        std::vector<Matrix> gens;        // strong generators fixing earlier base points
        std::vector<Matrix> gen_invs;

        // Transversal cache, parallel to a prefix of `orbit`; points past the
        // cache are reconstructed by walking the Schreier vector.
        std::vector<Matrix> u_cache, uinv_cache;
        Matrix u(uint32_t idx) const;     // base_point -> orbit[idx]
        Matrix uinv(uint32_t idx) const;
    };

    const std::vector<Level>& levels() const { return levels_; }
    Int order() const;

    /// Sifts m through the chain from `from_level`; returns the residue and
    /// the level reached (residue == identity iff m is a member).
    std::pair<Matrix, size_t> sift(const Matrix& m, size_t from_level = 0) const;
    bool contains(const Matrix& m) const;

  private:
    friend struct BsgsBuilder;
    std::vector<Level> levels_;
    int dim_ = 0;
};

struct BsgsOptions {
    unsigned long long seed = 1;
    bool verify = true;           // deterministic strong-generation check
    long long orbit_cap = 100000; // per-level orbit size cap
    ProgressFn progress;
};

struct BsgsResult {
    Int order;
    BSGSChain chain;
};

/// Randomized Schreier-Sims over the column-vector action, with an optional
/// (default-on) deterministic verification pass that upgrades the order to a
/// certificate. Throws OrbitCapExceeded / NotFinite per the option limits.
BsgsResult order_bsgs(const MatrixGroup& g, const BsgsOptions& opts = {});

}  // namespace grp
}  // namespace exalg

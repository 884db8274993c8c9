#include "exalg/matgroup.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace exalg {
namespace grp {

namespace {

std::string point_key(const std::vector<Scalar>& p) {
    std::string out;
    out.reserve(p.size() * 20);
    for (const auto& x : p) x.encode(out);
    return out;
}

void report(const ProgressFn& fn, const char* phase, long long count, long long level = 0) {
    if (!fn) return;
    if (!fn(Progress{phase, count, level})) fail(Err::Cancelled, "cancelled by caller");
}

}  // namespace

MatrixGroup MatrixGroup::from(std::vector<Matrix> gens) {
    if (gens.empty()) fail(Err::DimensionMismatch, "need at least one generator");
    int d = gens[0].rows();
    for (auto& g : gens) {
        if (!g.is_square() || g.rows() != d)
            fail(Err::DimensionMismatch, "generators must be square of equal size");
        inverse(g);  // throws Singular for non-invertible generators
    }
    return MatrixGroup{std::move(gens)};
}

void GroupClosure::insert(const Matrix& m) {
    auto [it, fresh] = pool_.insert(m.key());
    if (fresh) keys_.push_back(&*it);
}

Matrix GroupClosure::element(size_t i) const { return Matrix::decode(*keys_.at(i)); }

// Dimino closure over an arbitrary generator list (internal work-horse).
GroupClosure closure_of(std::vector<Matrix> gens, long long limit, const ProgressFn& progress) {
    GroupClosure c;
    if (gens.empty()) fail(Err::DimensionMismatch, "closure of an empty generator set");
    int dim = gens[0].rows();
    c.dim_ = dim;
    const Matrix ident = Matrix::identity(dim);
    c.insert(ident);
    c.gens_ = gens;

    auto guard = [&]() {
        if ((c.order() & 4095) == 0) report(progress, "closure", c.order());
        if (c.order() > limit) {
            Error e(Err::LimitExceeded,
                    "closure exceeded limit " + std::to_string(limit) + " (partial count " +
                        std::to_string(c.order()) + ")");
            e.detail_a = c.order();
            throw e;
        }
    };

    // cyclic group of the first generator
    Matrix m = gens[0];
    while (!m.is_identity()) {
        c.insert(m);
        guard();
        m = m * gens[0];
    }

    for (size_t gi = 1; gi < gens.size(); gi++) {
        const Matrix& s = gens[gi];
        if (c.contains(s)) continue;
        // previous subgroup H = current closure; extend by cosets
        std::vector<const std::string*> prev = c.keys_;
        std::deque<Matrix> reps;
        reps.push_back(s);
        for (auto* hk : prev) {
            c.insert(Matrix::decode(*hk) * s);
            guard();
        }
        while (!reps.empty()) {
            Matrix r = std::move(reps.front());
            reps.pop_front();
            for (size_t ti = 0; ti <= gi; ti++) {
                Matrix rt = r * gens[ti];
                if (!c.contains(rt)) {
                    reps.push_back(rt);
                    for (auto* hk : prev) {
                        c.insert(Matrix::decode(*hk) * rt);
                        guard();
                    }
                }
            }
        }
    }
    return c;
}

GroupClosure enumerate(const MatrixGroup& g, long long limit, const ProgressFn& progress) {
    if (limit < 1) fail(Err::DimensionMismatch, "limit must be >= 1");
    MatrixGroup checked = MatrixGroup::from(g.generators);
    GroupClosure c = closure_of(checked.generators, limit, progress);
    report(progress, "closure", c.order());
    return c;
}

GroupClosure derived_subgroup(const GroupClosure& c) {
    const auto& gens = c.generators();
    int dim = c.dim();
    std::vector<Matrix> seeds;
    std::unordered_set<std::string> seen;
    auto add_seed = [&](const Matrix& m) {
        if (m.is_identity()) return;
        if (seen.insert(m.key()).second) seeds.push_back(m);
    };
    std::vector<Matrix> invs;
    for (auto& g : gens) invs.push_back(inverse(g));
    for (size_t a = 0; a < gens.size(); a++)
        for (size_t b = 0; b < gens.size(); b++)
            add_seed(gens[a] * gens[b] * invs[a] * invs[b]);

    if (seeds.empty()) {
        // abelian: trivial derived subgroup
        GroupClosure t = closure_of({Matrix::identity(dim)}, 1, {});
        return t;
    }

    // normal closure: conjugate-close the commutator subgroup
    for (;;) {
        GroupClosure k = closure_of(seeds, c.order(), {});
        bool grew = false;
        for (long long i = 0; i < k.order() && !grew; i++) {
            Matrix h = k.element(i);
            for (size_t a = 0; a < gens.size(); a++) {
                Matrix t = gens[a] * h * invs[a];
                if (!k.contains(t)) {
                    add_seed(t);
                    grew = true;
                    break;
                }
            }
        }
        if (!grew) return k;
    }
}

StructureDescriptor identify_small(const GroupClosure& c) {
    StructureDescriptor d;
    d.order = c.order();
    if (d.order > 10000) fail(Err::LimitExceeded, "identify_small handles order <= 10^4");
    GroupClosure der = derived_subgroup(c);
    d.derived_order = der.order();

    // decode all elements once
    std::vector<Matrix> els;
    els.reserve(c.order());
    std::unordered_map<std::string, uint32_t> pos;
    for (long long i = 0; i < c.order(); i++) {
        els.push_back(c.element(i));
        pos.emplace(els.back().key(), uint32_t(i));
    }

    // coset labeling for the abelianization
    std::vector<uint32_t> coset_of(els.size(), UINT32_MAX);
    std::vector<uint32_t> rep;  // coset id -> element index
    for (uint32_t i = 0; i < els.size(); i++) {
        if (coset_of[i] != UINT32_MAX) continue;
        uint32_t id = uint32_t(rep.size());
        rep.push_back(i);
        for (long long j = 0; j < der.order(); j++)
            coset_of[pos.at((els[i] * der.element(j)).key())] = id;
    }
    const uint32_t asize = uint32_t(rep.size());
    auto qmul = [&](uint32_t a, uint32_t b) {
        return coset_of[pos.at((els[rep[a]] * els[rep[b]]).key())];
    };
    const uint32_t qid = coset_of[pos.at(Matrix::identity(c.dim()).key())];

    auto qorder = [&](uint32_t a) {
        uint32_t x = a;
        long long k = 1;
        while (x != qid) {
            x = qmul(x, a);
            k++;
        }
        return k;
    };

    // element orders in the quotient give the abelian invariants
    std::vector<long long> qorders(asize);
    for (uint32_t a = 0; a < asize; a++) qorders[a] = qorder(a);

    // per prime p | asize: lambda partition via counts of p^k-torsion
    std::vector<std::pair<long long, std::vector<int>>> primes;
    long long rest = asize;
    for (long long p = 2; p * p <= rest; p += (p == 2 ? 1 : 2))
        while (rest % p == 0) {
            if (primes.empty() || primes.back().first != p) primes.push_back({p, {}});
            rest /= p;
            primes.back().second.push_back(0);  // placeholder per power
        }
    if (rest > 1) primes.push_back({rest, {0}});

    std::vector<std::vector<int>> lambdas;  // per prime, descending partition
    for (auto& [p, dummy] : primes) {
        (void)dummy;
        long long p_part = 1;  // size of the Sylow p-subgroup of the quotient
        for (long long m = asize; m % p == 0; m /= p) p_part *= p;
        std::vector<long long> cnt;  // cnt[k] = #elements with order dividing p^k
        long long pk = 1;
        for (;;) {
            long long n = 0;
            for (uint32_t a = 0; a < asize; a++)
                if (pk % qorders[a] == 0) n++;
            cnt.push_back(n);
            if (n == p_part) break;
            pk *= p;
        }
        // e_k = log_p cnt[k]; d_k = e_k - e_{k-1} = #{i : lambda_i >= k}
        std::vector<int> exps;
        for (long long v : cnt) {
            int e = 0;
            while (v > 1) {
                v /= p;
                e++;
            }
            exps.push_back(e);
        }
        std::vector<int> lambda;
        for (size_t k = 1; k < exps.size(); k++) {
            int dk = exps[k] - exps[k - 1];
            for (int i = 0; i < dk; i++) {
                if (lambda.size() < size_t(i) + 1) lambda.resize(i + 1, 0);
                lambda[i]++;
            }
        }
        std::sort(lambda.rbegin(), lambda.rend());
        if (!lambda.empty()) lambdas.push_back(lambda);
    }
    // invariant factors: align prime powers by rank
    size_t nfac = 0;
    for (auto& l : lambdas) nfac = std::max(nfac, l.size());
    std::vector<long long> invariants(nfac, 1);
    for (size_t pi = 0; pi < lambdas.size(); pi++) {
        long long p = primes[pi].first;
        for (size_t i = 0; i < lambdas[pi].size(); i++) {
            long long pw = 1;
            for (int t = 0; t < lambdas[pi][i]; t++) pw *= p;
            invariants[i] *= pw;
        }
    }
    std::sort(invariants.begin(), invariants.end());
    d.abelianization = invariants;

    // exponent of the full group
    const Matrix ident = Matrix::identity(c.dim());
    long long expn = 1;
    for (auto& e : els) {
        Matrix m = e;
        long long k = 1;
        while (!m.is_identity()) {
            m = m * e;
            k++;
        }
        expn = std::lcm(expn, k);
    }
    d.exponent = expn;

    // decisive names only
    auto abel_name = [&]() {
        std::string n;
        for (auto v : d.abelianization) n += (n.empty() ? "C" : "xC") + std::to_string(v);
        return n.empty() ? "C1" : n;
    };
    if (d.derived_order == 1) {
        if (d.abelianization.size() <= 1)
            d.name = "C" + std::to_string(d.order);
        else
            d.name = abel_name();
    } else if (d.order == 12 && d.derived_order == 4 &&
               d.abelianization == std::vector<long long>{3}) {
        d.name = "A4";
    } else if (d.order == 6 && d.derived_order == 3) {
        d.name = "S3";
    } else if (d.order == 24 && d.derived_order == 12) {
        d.name = "S4";
    }
    return d;
}

// ---------------------------------------------------------------------------
// BSGS

Matrix BSGSChain::Level::u(uint32_t idx) const {
    if (idx < u_cache.size()) return u_cache[idx];
    // walk the Schreier vector to the root, then multiply forward
    std::vector<uint32_t> path;  // generator indices, leaf-to-root
    uint32_t cur = idx;
    while (cur != 0) {
        path.push_back(via_gen[cur]);
        cur = pred[cur];
    }
    Matrix m = Matrix::identity(gens[0].rows());
    for (auto it = path.rbegin(); it != path.rend(); ++it) m = gens[*it] * m;
    return m;
}

Matrix BSGSChain::Level::uinv(uint32_t idx) const {
    if (idx < uinv_cache.size()) return uinv_cache[idx];
    std::vector<uint32_t> path;
    uint32_t cur = idx;
    while (cur != 0) {
        path.push_back(via_gen[cur]);
        cur = pred[cur];
    }
    Matrix m = Matrix::identity(gens[0].rows());
    for (uint32_t gi : path) m = m * gen_invs[gi];
    return m;
}

Int BSGSChain::order() const {
    Int n(1);
    for (auto& lv : levels_) n = n * Int((long long)lv.orbit.size());
    return n;
}

std::pair<Matrix, size_t> BSGSChain::sift(const Matrix& m, size_t from_level) const {
    Matrix cur = m;
    for (size_t l = from_level; l < levels_.size(); l++) {
        const Level& lv = levels_[l];
        std::vector<Scalar> p = cur.apply(lv.base_point);
        auto it = lv.orbit_index.find(point_key(p));
        if (it == lv.orbit_index.end()) return {cur, l};
        if (it->second != 0) cur = lv.uinv(it->second) * cur;
    }
    return {cur, levels_.size()};
}

bool BSGSChain::contains(const Matrix& m) const {
    if (m.rows() != dim_ || m.cols() != dim_)
        fail(Err::DimensionMismatch, "membership test dimension mismatch");
    auto [residue, level] = sift(m);
    (void)level;
    return residue.is_identity();
}

namespace {
constexpr uint32_t kTransversalCache = 10000;
}  // namespace

// Friend of BSGSChain; must live in the enclosing namespace.
struct BsgsBuilder {
    int dim;
    BsgsOptions opts;
    std::mt19937_64 rng;
    BSGSChain chain;
    std::vector<std::vector<uint32_t>> checked;  // per level, per point: #gens verified
    std::vector<std::unordered_set<std::string>> sifted_schreier;  // per level dedupe

    explicit BsgsBuilder(int d, const BsgsOptions& o) : dim(d), opts(o), rng(o.seed) {
        chain.dim_ = d;
    }

    std::vector<Scalar> random_point() {
        std::uniform_int_distribution<int> coord(-2, 2);
        std::vector<Scalar> p(dim);
        bool nonzero = false;
        for (auto& x : p) {
            int v = coord(rng);
            x = Scalar(v);
            nonzero = nonzero || v != 0;
        }
        if (!nonzero) p[0] = Scalar(1);
        return p;
    }

    // Candidate base points moved by the given element: standard basis
    // vectors first, then seeded random short integer vectors.
    std::vector<std::vector<Scalar>> base_candidates(const Matrix& moved_by) {
        std::vector<std::vector<Scalar>> out;
        for (int i = 0; i < dim; i++) {
            std::vector<Scalar> e(dim);
            e[i] = Scalar(1);
            if (moved_by.apply(e) != e) out.push_back(std::move(e));
        }
        for (int t = 0; t < 16; t++) {
            auto p = random_point();
            if (moved_by.apply(p) != p) out.push_back(std::move(p));
        }
        if (out.empty()) fail(Err::NotFinite, "generator moves no candidate base point");
        return out;
    }

    void extend_orbit(size_t li) {
        auto& lv = chain.levels_[li];
        if (lv.orbit.empty()) {
            lv.orbit.push_back(lv.base_point);
            lv.orbit_index.emplace(point_key(lv.base_point), 0);
            lv.pred.push_back(0);
            lv.via_gen.push_back(0);
            lv.u_cache.push_back(Matrix::identity(dim));
            lv.uinv_cache.push_back(Matrix::identity(dim));
        }
        for (uint32_t scan = 0; scan < lv.orbit.size(); scan++) {
            for (uint32_t gi = 0; gi < lv.gens.size(); gi++) {
                std::vector<Scalar> q = lv.gens[gi].apply(lv.orbit[scan]);
                std::string k = point_key(q);
                if (lv.orbit_index.count(k)) continue;
                uint32_t idx = uint32_t(lv.orbit.size());
                if ((long long)idx + 1 > opts.orbit_cap) {
                    Error e(Err::OrbitCapExceeded, "orbit at level " + std::to_string(li) +
                                                       " exceeded cap " +
                                                       std::to_string(opts.orbit_cap));
                    e.detail_a = (long long)li;
                    throw e;
                }
                lv.orbit_index.emplace(std::move(k), idx);
                lv.orbit.push_back(std::move(q));
                lv.pred.push_back(scan);
                lv.via_gen.push_back(gi);
                if (idx < kTransversalCache) {
                    lv.u_cache.push_back(lv.gens[gi] * lv.u_cache[scan]);
                    lv.uinv_cache.push_back(lv.uinv_cache[scan] * lv.gen_invs[gi]);
                }
            }
            if ((scan & 1023) == 0)
                report(opts.progress, "orbit", (long long)lv.orbit.size(), (long long)li);
        }
        checked.resize(chain.levels_.size());
        checked[li].resize(lv.orbit.size(), 0);
    }

    // Adds a residue fixing base points < depth to levels [lo, depth]; creates
    // a new level when depth == levels.size(). Returns the deepest level added.
    size_t add_residue(size_t lo, size_t depth, const Matrix& r) {
        if (depth == chain.levels_.size()) {
            // New level: try candidate base points until the initial orbit
            // stays under the cap; all candidates exceeding it means the
            // group is not finite at this cap.
            bool made = false;
            for (auto& bp : base_candidates(r)) {
                BSGSChain::Level lv;
                lv.base_point = bp;
                chain.levels_.push_back(std::move(lv));
                checked.resize(chain.levels_.size());
                sifted_schreier.resize(chain.levels_.size());
                auto& fresh = chain.levels_.back();
                fresh.gens.push_back(r);
                fresh.gen_invs.push_back(inverse(r));
                try {
                    extend_orbit(depth);
                    made = true;
                    break;
                } catch (const Error& e) {
                    if (e.kind() != Err::OrbitCapExceeded) throw;
                    chain.levels_.pop_back();
                    checked.resize(chain.levels_.size());
                    sifted_schreier.resize(chain.levels_.size());
                }
            }
            if (!made)
                fail(Err::NotFinite, "orbit cap exceeded at every candidate base point");
        }
        std::string rk = r.key();
        Matrix rinv = inverse(r);
        for (size_t l = lo; l <= depth && l < chain.levels_.size(); l++) {
            auto& lv = chain.levels_[l];
            bool dup = false;
            for (auto& g : lv.gens)
                if (g.key() == rk) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            lv.gens.push_back(r);
            lv.gen_invs.push_back(rinv);
            // new generator: recheck every orbit point against it
            extend_orbit(l);
        }
        return depth;
    }

    // Sift a candidate group element until it strips to identity, adding
    // residues as strong generators. Returns true if anything was added.
    bool add_element(const Matrix& g) {
        bool any = false;
        for (;;) {
            auto [r, level] = chain.sift(g);
            if (r.is_identity()) return any;
            add_residue(0, level, r);
            any = true;
        }
    }

    // Deterministic Schreier-Sims completion; on success the chain order is
    // a certificate of strong generation.
    void complete() {
        checked.resize(chain.levels_.size());
        sifted_schreier.resize(chain.levels_.size());
        size_t li = chain.levels_.size();
        while (li > 0) {
            size_t i = li - 1;
            auto& lv = chain.levels_[i];
            checked[i].resize(lv.orbit.size(), 0);
            bool added = false;
            for (uint32_t pi = 0; pi < lv.orbit.size() && !added; pi++) {
                while (checked[i][pi] < lv.gens.size() && !added) {
                    uint32_t gi = checked[i][pi]++;
                    std::vector<Scalar> q = lv.gens[gi].apply(lv.orbit[pi]);
                    uint32_t qidx = lv.orbit_index.at(point_key(q));
                    Matrix schreier = lv.uinv(qidx) * lv.gens[gi] * lv.u(pi);
                    if (schreier.is_identity()) continue;
                    if (!sifted_schreier[i].insert(schreier.key()).second) continue;
                    auto [r, depth] = chain.sift(schreier, i + 1);
                    if (!r.is_identity()) {
                        add_residue(i + 1, depth, r);
                        li = depth + 1;  // re-verify from the deepest change
                        added = true;
                    }
                }
                if ((pi & 255) == 0)
                    report(opts.progress, "verify", (long long)pi, (long long)i);
            }
            if (!added) li = i;
        }
    }
};

BsgsResult order_bsgs(const MatrixGroup& g, const BsgsOptions& opts) {
    MatrixGroup checked = MatrixGroup::from(g.generators);
    int dim = checked.dim();
    BsgsBuilder b(dim, opts);

    std::vector<Matrix> gens;
    for (auto& m : checked.generators)
        if (!m.is_identity()) gens.push_back(m);
    if (gens.empty()) return {Int(1), std::move(b.chain)};

    for (auto& m : gens) b.add_element(m);

    // randomized phase: sift random words until they keep stripping
    std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
    std::uniform_int_distribution<int> len(3, 12);
    int quiet = 0;
    for (int it = 0; it < 300 && quiet < 25; it++) {
        Matrix w = gens[pick(b.rng)];
        int l = len(b.rng);
        for (int k = 1; k < l; k++) w = w * gens[pick(b.rng)];
        quiet = b.add_element(w) ? 0 : quiet + 1;
    }

    if (opts.verify) b.complete();
    Int order = b.chain.order();
    return {order, std::move(b.chain)};
}

}  // namespace grp
}  // namespace exalg

/*
   Copyright 2026 The oddball authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ODDBALL_SCHROEDER_HPP
#define ODDBALL_SCHROEDER_HPP

/*
 * Schroeder paths: lattice paths with ascents (+1,+1), descents (+1,-1) and
 * flat steps (+2,0).  A disjoint k-collection is k+1 vertex-disjoint paths,
 * path i running from (-i,i) to (i,i); path 0 is the single vertex (0,0).
 *
 *   N_p = sum over (p+1)-collections of W2,  D_p = sum over (p-1)-collections of W0
 *
 * and the reverse Bessel polynomials count nonnegative paths under the
 * weighting whose continued fraction is
 *
 *   1 / (1 - d_1 t - a_1 t / (1 - d_2 t - a_2 t / (1 - ...))),
 *   a = (R, 1, 2, 3, ...),  d = (0, 0, R, R, ...).
 */

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oddball/bessel.hpp"
#include "oddball/exactalg.hpp"
#include "oddball/hankel.hpp"

namespace oddball {

enum class StepKind { ascent, descent, flat };

struct LatticePoint {
    int x = 0;
    int y = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

struct SchroederStep {
    StepKind kind;
    LatticePoint start;

    LatticePoint end() const {
        switch (kind) {
            case StepKind::ascent: return {start.x + 1, start.y + 1};
            case StepKind::descent: return {start.x + 1, start.y - 1};
            case StepKind::flat: return {start.x + 2, start.y};
        }
        return start;
    }
};

inline char step_letter(StepKind k) {
    switch (k) {
        case StepKind::ascent: return 'U';
        case StepKind::descent: return 'D';
        case StepKind::flat: return 'F';
    }
    return '?';
}

inline StepKind step_kind(char c) {
    switch (c) {
        case 'U': return StepKind::ascent;
        case 'D': return StepKind::descent;
        case 'F': return StepKind::flat;
        default: throw ParseError(std::string("unknown step letter '") + c + "'");
    }
}

/// A path stored as its start point and a U/D/F word.
struct SchroederPath {
    LatticePoint start;
    std::string word;

    std::vector<SchroederStep> steps() const {
        std::vector<SchroederStep> out;
        out.reserve(word.size());
        LatticePoint at = start;
        for (char c : word) {
            out.push_back({step_kind(c), at});
            at = out.back().end();
        }
        return out;
    }

    std::vector<LatticePoint> vertices() const {
        std::vector<LatticePoint> out{start};
        for (const auto& s : steps()) out.push_back(s.end());
        return out;
    }

    LatticePoint end() const { return vertices().back(); }
};

/// k = -1 is the empty collection (no paths at all).
struct SchroederCollection {
    int k = 0;
    std::vector<SchroederPath> paths;
};

/// c * R^power
struct Monomial {
    BigInt coeff = 1;
    long power = 0;

    bool is_zero() const { return coeff == 0; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        return {a.coeff * b.coeff, a.power + b.power};
    }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.coeff == b.coeff && (a.coeff == 0 || a.power == b.power);
    }

    IntPoly to_poly() const {
        if (power < 0) throw InvalidArgument("negative monomial power");
        return IntPoly::monomial(coeff, static_cast<std::size_t>(power));
    }
};

enum class WeightingName { W0, W2, WrB };

inline std::string to_string(WeightingName w) {
    switch (w) {
        case WeightingName::W0: return "W0";
        case WeightingName::W2: return "W2";
        case WeightingName::WrB: return "WrB";
    }
    return "?";
}

/// Step weights. Ascents weigh 1 throughout.
///   W0:  flat -> R, descent from height h -> h+1
///   W2:  flat -> R, descent from height h -> h-1
///   WrB: flat at level l -> d_{l+1}, descent from height h -> a_h
struct PathWeighting {
    WeightingName name = WeightingName::W0;

    Monomial descent(int h) const {
        switch (name) {
            case WeightingName::W0: return {BigInt(h + 1), 0};
            case WeightingName::W2: return {BigInt(h - 1), 0};
            case WeightingName::WrB:
                if (h <= 0) return {BigInt(0), 0};
                if (h == 1) return {BigInt(1), 1};
                return {BigInt(h - 1), 0};
        }
        return {};
    }

    Monomial flat(int level) const {
        if (name == WeightingName::WrB && level < 2) return {BigInt(0), 0};
        return {BigInt(1), 1};
    }

    Monomial step(const SchroederStep& s) const {
        switch (s.kind) {
            case StepKind::ascent: return {};
            case StepKind::descent: return descent(s.start.y);
            case StepKind::flat: return flat(s.start.y);
        }
        return {};
    }
};

inline const PathWeighting kW0{WeightingName::W0};
inline const PathWeighting kW2{WeightingName::W2};
inline const PathWeighting kWrB{WeightingName::WrB};

inline Monomial weight_path(const SchroederPath& path, const PathWeighting& w) {
    Monomial m;
    for (const auto& s : path.steps()) {
        m = m * w.step(s);
        if (m.is_zero()) break;
    }
    return m;
}

inline Monomial weight_collection(const SchroederCollection& c, const PathWeighting& w) {
    Monomial m;
    for (const auto& path : c.paths) {
        m = m * weight_path(path, w);
        if (m.is_zero()) break;
    }
    return m;
}

/// Sum of monomials kept densely by power.
class MonomialAccumulator {
public:
    void add(const Monomial& m) {
        if (m.is_zero()) return;
        if (m.power < 0) throw InvalidArgument("negative monomial power");
        const auto k = static_cast<std::size_t>(m.power);
        if (acc_.size() <= k) acc_.resize(k + 1);
        acc_[k] += m.coeff;
    }
    IntPoly value() const { return IntPoly(acc_); }

private:
    std::vector<BigInt> acc_;
};

inline constexpr int kDefaultMaxCollectionSize = 6;

/// Endpoints of one path in a disjoint family.
struct PathEnds {
    LatticePoint from;
    LatticePoint to;
};

/// Optional per-step filter used to skip steps known to carry zero weight.
using StepFilter = std::function<bool(const SchroederStep&)>;

namespace detail {

/// Depth-first enumeration of vertex-disjoint path families with the given
/// endpoints, innermost path first. The collection passed to the visitor is
/// reused between calls.
class DisjointPathEnumerator {
public:
    DisjointPathEnumerator(std::vector<PathEnds> ends, std::optional<int> floor, StepFilter filter)
        : ends_(std::move(ends)), floor_(floor), filter_(std::move(filter)) {
        x0_ = 0;
        int y_lo = 0, y_hi = 0;
        bool first = true;
        for (const auto& e : ends_) {
            if (e.to.x < e.from.x) throw InvalidArgument("path end lies left of its start");
            const int lo = std::min(e.from.x, e.to.x), hi = std::max(e.from.x, e.to.x);
            const int ylo = std::min(e.from.y, e.to.y) - (hi - lo), yhi = std::max(e.from.y, e.to.y) + (hi - lo);
            if (first) {
                x0_ = lo, x1_ = hi, y_lo = ylo, y_hi = yhi;
                first = false;
            } else {
                x0_ = std::min(x0_, lo), x1_ = std::max(x1_, hi);
                y_lo = std::min(y_lo, ylo), y_hi = std::max(y_hi, yhi);
            }
        }
        y0_ = y_lo;
        cols_ = x1_ - x0_ + 1;
        rows_ = y_hi - y_lo + 1;
        owner_.assign(static_cast<std::size_t>(std::max(cols_ * rows_, 1)), kFree);
    }

    void run(const std::function<void(const SchroederCollection&)>& visit, int k_label) {
        coll_.k = k_label;
        coll_.paths.assign(ends_.size(), {});
        for (std::size_t i = 0; i < ends_.size(); ++i) coll_.paths[i].start = ends_[i].from;
        // Reserve every endpoint for its own path.
        for (std::size_t i = 0; i < ends_.size(); ++i) {
            for (const LatticePoint& q : {ends_[i].from, ends_[i].to}) {
                int& o = cell(q);
                if (o != kFree && o != static_cast<int>(i)) return;  // shared endpoint: no families
                o = static_cast<int>(i);
            }
        }
        visit_ = &visit;
        next_path(0);
    }

private:
    static constexpr int kFree = -1;
    static constexpr int kUsed = -2;

    int& cell(const LatticePoint& q) {
        return owner_[static_cast<std::size_t>((q.y - y0_) * cols_ + (q.x - x0_))];
    }

    bool inside(const LatticePoint& q) const {
        return q.x >= x0_ && q.x <= x1_ && q.y >= y0_ && q.y < y0_ + rows_;
    }

    void next_path(std::size_t i) {
        if (i == ends_.size()) {
            (*visit_)(coll_);
            return;
        }
        walk(i, ends_[i].from);
    }

    void walk(std::size_t i, const LatticePoint& at) {
        const LatticePoint& target = ends_[i].to;
        if (at == target) {
            next_path(i + 1);
            return;
        }
        static constexpr StepKind kinds[] = {StepKind::ascent, StepKind::descent, StepKind::flat};
        for (StepKind kind : kinds) {
            const SchroederStep s{kind, at};
            const LatticePoint q = s.end();
            const int dx = target.x - q.x;
            if (dx < 0 || std::abs(target.y - q.y) > dx) continue;
            if (floor_ && q.y < *floor_) continue;
            if (!inside(q)) continue;
            int& o = cell(q);
            const bool own_end = q == target;
            if (!(o == kFree || (own_end && o == static_cast<int>(i)))) continue;
            if (filter_ && !filter_(s)) continue;
            const int saved = o;
            if (!own_end) o = kUsed;
            coll_.paths[i].word.push_back(step_letter(kind));
            walk(i, q);
            coll_.paths[i].word.pop_back();
            o = saved;
        }
    }

    std::vector<PathEnds> ends_;
    std::optional<int> floor_;
    StepFilter filter_;
    int x0_ = 0, x1_ = 0, y0_ = 0, cols_ = 0, rows_ = 0;
    std::vector<int> owner_;
    SchroederCollection coll_;
    const std::function<void(const SchroederCollection&)>* visit_ = nullptr;
};

} // namespace detail

/// Visits every disjoint k-collection exactly once. k = -1 yields the single
/// empty collection.
inline void enumerate_collections(int k, const std::function<void(const SchroederCollection&)>& visit,
                                  int k_max = kDefaultMaxCollectionSize) {
    if (k < -1) throw InvalidArgument("collection size must be >= -1");
    if (k > k_max) throw TooLarge("k = " + std::to_string(k) + " exceeds the enumeration bound " + std::to_string(k_max));
    if (k == -1) {
        visit(SchroederCollection{-1, {}});
        return;
    }
    std::vector<PathEnds> ends;
    for (int i = 0; i <= k; ++i) ends.push_back({{-i, i}, {i, i}});
    detail::DisjointPathEnumerator(std::move(ends), std::nullopt, nullptr).run(visit, k);
}

inline unsigned long long count_collections(int k, int k_max = kDefaultMaxCollectionSize) {
    unsigned long long count = 0;
    enumerate_collections(k, [&](const SchroederCollection&) { ++count; }, k_max);
    return count;
}

/// Weighted sum of a weighting over all k-collections.
inline IntPoly collection_sum(int k, const PathWeighting& w, int k_max = kDefaultMaxCollectionSize) {
    MonomialAccumulator acc;
    enumerate_collections(k, [&](const SchroederCollection& c) { acc.add(weight_collection(c, w)); }, k_max);
    return acc.value();
}

/// N_p as the W2-weighted count of (p+1)-collections.
inline IntPoly combinatorial_N(unsigned p, int k_max = kDefaultMaxCollectionSize) {
    return collection_sum(static_cast<int>(p) + 1, kW2, k_max);
}

/// D_p as the W0-weighted count of (p-1)-collections.
inline IntPoly combinatorial_D(unsigned p, int k_max = kDefaultMaxCollectionSize) {
    return collection_sum(static_cast<int>(p) - 1, kW0, k_max);
}

inline MagnitudeResult magnitude_schroeder(unsigned p, int k_max = kDefaultMaxCollectionSize) {
    return make_result(p, combinatorial_N(p, k_max), combinatorial_D(p, k_max), Method::schroeder);
}

/// Number of ascents and descents across all paths of a collection.
inline std::pair<std::size_t, std::size_t> ascent_descent_counts(const SchroederCollection& c) {
    std::size_t up = 0, down = 0;
    for (const auto& path : c.paths)
        for (char s : path.word) {
            up += s == 'U';
            down += s == 'D';
        }
    return {up, down};
}

// ---------------------------------------------------------------------------
// Continued fraction and path counts

/// Truncated power series in t with coefficients in Z[R].
using Series = std::vector<IntPoly>;

namespace detail {

inline Series series_mul(const Series& a, const Series& b, std::size_t terms) {
    Series c(terms);
    for (std::size_t i = 0; i < terms && i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < terms && j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

/// 1/u for a series with u_0 = 1.
inline Series series_inverse_unit(const Series& u, std::size_t terms) {
    Series v(terms);
    v[0] = IntPoly{1};
    for (std::size_t m = 1; m < terms; ++m) {
        IntPoly acc;
        for (std::size_t k = 1; k <= m && k < u.size(); ++k) acc += u[k] * v[m - k];
        v[m] = -acc;
    }
    return v;
}

inline IntPoly cf_alpha(unsigned level) { return level == 1 ? IntPoly::r() : IntPoly{static_cast<long>(level) - 1}; }
inline IntPoly cf_delta(unsigned level) { return level < 3 ? IntPoly{} : IntPoly::r(); }

} // namespace detail

/// Series coefficients of the continued fraction cut after `depth` levels.
/// Coefficient i only sees levels up to i, so depth > num_terms leaves every
/// returned coefficient exact.
inline std::vector<IntPoly> cf_series(unsigned depth, unsigned num_terms) {
    if (num_terms < 1) throw InvalidArgument("cf_series needs at least one term");
    if (depth < num_terms + 1)
        throw InsufficientDepth("depth " + std::to_string(depth) + " cannot fix " + std::to_string(num_terms) +
                                " coefficients");
    const std::size_t T = num_terms;
    Series g(T);  // level depth+1 is cut to zero
    for (unsigned level = depth; level >= 1; --level) {
        // g_level = 1 / (1 - d_level t - a_level t g_{level+1})
        Series u(T);
        u[0] = IntPoly{1};
        if (T > 1) u[1] = -detail::cf_delta(level);
        const IntPoly a = detail::cf_alpha(level);
        for (std::size_t i = 0; i + 1 < T; ++i) u[i + 1] -= a * g[i];
        g = detail::series_inverse_unit(u, T);
    }
    return g;
}

/// Weighted count of nonnegative-height paths from (0,0) to (2i,0), by
/// dynamic programming over columns.
inline IntPoly path_count_T(unsigned i, const PathWeighting& w) {
    const int width = 2 * static_cast<int>(i);
    const int top = static_cast<int>(i);  // a path of width 2i peaks at height <= i
    // reach[x][h]: weighted count of paths from (0,0) to (x,h).
    std::vector<std::vector<IntPoly>> reach(static_cast<std::size_t>(width + 1),
                                            std::vector<IntPoly>(static_cast<std::size_t>(top + 2)));
    reach[0][0] = IntPoly{1};
    for (int x = 0; x < width; ++x) {
        for (int h = 0; h <= top; ++h) {
            const IntPoly& cur = reach[static_cast<std::size_t>(x)][static_cast<std::size_t>(h)];
            if (cur.is_zero()) continue;
            auto add = [&](int nx, int nh, const Monomial& m) {
                if (nx > width || nh < 0 || nh > top || m.is_zero()) return;
                reach[static_cast<std::size_t>(nx)][static_cast<std::size_t>(nh)] += cur * m.to_poly();
            };
            add(x + 1, h + 1, Monomial{});
            add(x + 1, h - 1, w.descent(h));
            add(x + 2, h, w.flat(h));
        }
    }
    return reach[static_cast<std::size_t>(width)][0];
}

/// Weighted sum over disjoint families of nonnegative paths from (-2m,0) to
/// (2m,0), m = shift..shift+k, under WrB. Steps of weight zero are pruned,
/// which does not change the sum.
inline IntPoly lgv_collection_sum(int k, int shift) {
    std::vector<PathEnds> ends;
    for (int i = 0; i <= k; ++i) {
        const int m = i + shift;
        ends.push_back({{-2 * m, 0}, {2 * m, 0}});
    }
    const StepFilter nonzero = [](const SchroederStep& s) { return !kWrB.step(s).is_zero(); };
    MonomialAccumulator acc;
    detail::DisjointPathEnumerator(std::move(ends), 0, nonzero)
        .run([&](const SchroederCollection& c) { acc.add(weight_collection(c, kWrB)); }, k);
    return acc.value();
}

inline constexpr int kMaxLgvSize = 3;

/// det[T_{i+j+2 shift}]_{0..k} against the enumerated disjoint families.
inline bool lgv_check(int k, int shift) {
    if (k < 0) throw InvalidArgument("lgv_check needs k >= 0");
    if (shift != 0 && shift != 1) throw InvalidArgument("lgv_check shift must be 0 or 1");
    if (k > kMaxLgvSize) throw TooLarge("lgv_check is bounded to k <= " + std::to_string(kMaxLgvSize));
    std::vector<IntPoly> m;
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= k; ++j) m.push_back(path_count_T(static_cast<unsigned>(i + j + 2 * shift), kWrB));
    const IntPoly det = bareiss_det(std::move(m), static_cast<std::size_t>(k + 1));
    return det == lgv_collection_sum(k, shift);
}

/// det[chi_{i+j}] = R^p sf(p) sum_{X_{p-1}} W0  and
/// det[chi_{i+j+2}] = R^{p+1} sf(p) sum_{X_{p+1}} W2.
inline bool factored_identity_check(unsigned p, int k_max = kDefaultMaxCollectionSize) {
    if (static_cast<int>(p) + 1 > k_max) throw TooLarge("p + 1 exceeds the enumeration bound");
    const BigInt sf = superfactorial(p);
    const bool plain = hankel_det(0, p) == (combinatorial_D(p, k_max) * sf).shifted_up(p);
    const bool shifted = hankel_det(2, p) == (combinatorial_N(p, k_max) * sf).shifted_up(p + 1);
    return plain && shifted;
}

} // namespace oddball

#endif // ODDBALL_SCHROEDER_HPP

#include "maskit/lamination.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <set>

#include <nlohmann/json.hpp>

#include "maskit/arcs.hpp"
#include "maskit/errors.hpp"
#include "maskit/topterms.hpp"

namespace maskit {

Curve make_curve(const GroupWord& w) {
    const GroupWord c = cyclic_reduce(w);
    return {c, infer_coords_from_trace(c)};
}

RationalLamination::RationalLamination(std::vector<LaminationComponent> components)
    : components_(std::move(components)) {
    for (const auto& c : components_)
        if (c.weight <= 0) throw PreconditionError("lamination weights must be positive");
    for (std::size_t i = 0; i < components_.size(); ++i)
        for (std::size_t j = i + 1; j < components_.size(); ++j) {
            const Curve& a = components_[i].curve;
            const Curve& b = components_[j].curve;
            if (a.coords == b.coords)
                throw PreconditionError("lamination components " + a.word.str() + " and " + b.word.str() +
                                        " are the same curve");
            if (!disjoint(a.word, b.word))
                throw PreconditionError("lamination components " + a.word.str() + " and " + b.word.str() +
                                        " intersect");
        }
}

RationalLamination RationalLamination::single(const Curve& c, const Rational& weight) {
    return RationalLamination({{weight, c}});
}

RationalCoords RationalLamination::coords() const {
    RationalCoords r{0, 0, 0, 0};
    for (const auto& [w, c] : components_) {
        const auto v = c.coords.vec();
        for (int i = 0; i < 4; ++i) r[i] += w * v[i];
    }
    return r;
}

bool RationalLamination::admissible() const {
    const auto c = coords();
    return c[0] > 0 && c[2] > 0;
}

std::string RationalLamination::str() const {
    std::string s;
    for (const auto& [w, c] : components_) {
        if (!s.empty()) s += " + ";
        s += rational_str(w) + "*" + c.word.str();
    }
    return s;
}

std::string RationalLamination::json() const {
    nlohmann::ordered_json comps = nlohmann::ordered_json::array();
    for (const auto& [w, c] : components_) {
        const auto v = c.coords.vec();
        comps.push_back({{"weight", rational_str(w)},
                         {"word", c.word.str()},
                         {"coords", {v[0], v[1], v[2], v[3]}}});
    }
    nlohmann::ordered_json j;
    j["components"] = comps;
    return j.dump();
}

AsymptoticLine asymptotic_line(const RationalLamination& xi) {
    if (!xi.admissible()) throw PreconditionError("lamination is not admissible (needs q1 > 0 and q2 > 0)");
    const auto c = xi.coords();
    AsymptoticLine l;
    l.x1_star = -2 * c[1] / c[0];
    l.x2_star = -2 * c[3] / c[2];
    l.psi = std::atan2(c[0].convert_to<double>(), c[2].convert_to<double>());
    l.im_ratio = c[2] / c[0];
    return l;
}

std::vector<GroupWord> seed_words() {
    return {parse_word("t"), parse_word("aTAt"), parse_word("bTBt"), parse_word("aBT"),
            parse_word("AbT")};
}

namespace {

std::vector<Curve> enumerate_uncached(int depth, const EnumerationOptions& opt) {
    std::vector<Automorphism> auts{twist_sigma1(1), twist_sigma1(-1), twist_sigma2(1),
                                   twist_sigma2(-1)};
    if (opt.twist_t) {
        auts.push_back(twist_t(1));
        auts.push_back(twist_t(-1));
    }
    std::vector<Curve> out;
    std::set<CanonicalCoords> seen;
    std::vector<GroupWord> level;
    for (const auto& w : seed_words()) {
        Curve c = make_curve(w);
        if (seen.insert(c.coords).second) {
            out.push_back(c);
            level.push_back(c.word);
        }
    }
    for (int d = 0; d < depth; ++d) {
        std::vector<GroupWord> next;
        for (const auto& w : level) {
            for (const auto& f : auts) {
                const GroupWord img = f.apply_cyclic(w);
                if (img.empty()) continue;
                CanonicalCoords cc;
                try {
                    cc = infer_coords_from_trace(img);
                } catch (const NotSimpleError&) {
                    continue;  // sigma_1, sigma_2 and the punctures: constant trace
                }
                if (seen.insert(cc).second) {
                    out.push_back({img, cc});
                    next.push_back(img);
                }
            }
        }
        level = std::move(next);
    }
    return out;
}

}  // namespace

std::vector<Curve> enumerate_curves(int depth, const EnumerationOptions& opt) {
    if (depth < 0) throw PreconditionError("enumeration depth must be >= 0");
    static std::mutex mu;
    static std::map<std::pair<int, bool>, std::vector<Curve>> cache;
    std::lock_guard lock(mu);
    const auto key = std::make_pair(depth, opt.twist_t);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, enumerate_uncached(depth, opt)).first;
    return it->second;
}

std::vector<Curve> wheel_search(const GroupWord& gamma, int count, int depth) {
    if (count < 0) throw PreconditionError("wheel size must be >= 0");
    const GroupWord g = cyclic_reduce(gamma);
    if (!is_simple(g)) throw NotSimpleError(g.str() + " is not a simple closed curve");
    const CanonicalCoords gc = infer_coords_from_trace(g);
    std::vector<Curve> chosen;
    if (count == 0) return chosen;

    const int target = std::min(count + 1, 3);
    std::vector<CanonicalCoords> span{gc};
    int rank = coords_rank(span);
    for (const Curve& c : enumerate_curves(depth)) {
        if (c.coords == gc) continue;
        if (thurston_pairing(gc, c.coords) != 0) continue;
        if (!disjoint(g, c.word)) continue;
        span.push_back(c.coords);
        const int r = coords_rank(span);
        if (rank < target && r == rank) {
            span.pop_back();
            continue;
        }
        rank = r;
        chosen.push_back(c);
        if (static_cast<int>(chosen.size()) == count && rank >= target) return chosen;
    }
    throw NotFoundError("wheel of " + g.str() + " exhausted at enumeration depth " +
                        std::to_string(depth));
}

Curve nonexceptional_partner(const GroupWord& gamma, int depth) {
    const GroupWord g = cyclic_reduce(gamma);
    if (!is_simple(g)) throw NotSimpleError(g.str() + " is not a simple closed curve");
    const CanonicalCoords gc = infer_coords_from_trace(g);
    if (!is_admissible(gc)) throw PreconditionError(g.str() + " " + gc.str() + " is not admissible");
    for (const Curve& c : enumerate_curves(depth)) {
        if (c.coords == gc || thurston_pairing(gc, c.coords) != 0) continue;
        if (is_exceptional_pair(gc, c.coords)) continue;
        if (disjoint(g, c.word)) return c;
    }
    throw NotFoundError("no non-exceptional partner of " + g.str() + " at enumeration depth " +
                        std::to_string(depth));
}

}  // namespace maskit

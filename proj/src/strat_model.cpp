#include "shb/strat_model.hpp"

#include <set>

namespace shb {

Q StratModel::sample(std::size_t i) const {
    const std::size_t k = critical.size();
    if (k == 0) return Q(0);
    if (i == 0) return critical.front() - 1;
    if (i == k) return critical.back() + 1;
    return (critical[i - 1] + critical[i]) / 2;
}

void StratModel::validate() const {
    const std::size_t k = critical.size();
    for (std::size_t i = 1; i < k; ++i)
        if (!(critical[i - 1] < critical[i])) throw ValidationError("critical values must increase strictly");
    if (open_dims.size() != k + 1) throw ValidationError("need one open stratum more than critical values");
    if (point_dims.size() != k) throw ValidationError("need one point stalk per critical value");
    std::set<int> degrees;
    for (const auto& h : open_dims)
        for (const auto& [d, n] : h.dims()) degrees.insert(d);
    for (int d : degrees) {
        auto it = maps.find(d);
        if (k > 0 && it == maps.end()) throw ValidationError("missing transition maps in degree " + std::to_string(d));
        if (k == 0) continue;
        if (it->second.size() != k) throw ValidationError("wrong number of transition maps in degree " + std::to_string(d));
        for (std::size_t i = 0; i < k; ++i) {
            const auto& m = it->second[i];
            if (m.rows() != open_dims[i].at(d) || m.cols() != open_dims[i + 1].at(d))
                throw ValidationError("transition matrix shape does not match stalk dimensions");
            if (m.prime() != prime) throw ValidationError("transition matrix over the wrong field");
        }
    }
    for (const auto& [d, ms] : maps) {
        if (degrees.count(d)) continue;
        for (const auto& m : ms)
            if (m.rows() || m.cols()) throw ValidationError("transition matrix in an empty degree");
    }
    // The tau >= 0 class: stalk at lambda_i equals the stalk just to its right.
    for (std::size_t i = 0; i < k; ++i)
        if (!(point_dims[i] == open_dims[i + 1]))
            throw ValidationError("point stalk differs from the stalk on its right: not in the tau >= 0 class");
}

StratModel from_barcode(const GradedBarcode& b, std::uint32_t prime) {
    for (const auto& bar : b.bars)
        if (!bar.interval.is_left_closed_type())
            throw NotTamarkinClass("from_barcode got " + bar.interval.str());
    StratModel m;
    m.prime = prime;
    m.critical = spec(b);
    const std::size_t k = m.critical.size();
    auto bars = b.expanded();
    // Basis of the degree-d stalk at stratum i: indices of degree-d bars covering its sample.
    std::map<int, std::vector<std::vector<std::size_t>>> basis;
    for (std::size_t i = 0; i <= k; ++i) {
        Q t = m.sample(i);
        HomSpace h;
        for (std::size_t j = 0; j < bars.size(); ++j) {
            if (!bars[j].interval.contains(t)) continue;
            h.add(bars[j].degree, 1);
            auto& per = basis[bars[j].degree];
            per.resize(k + 1);
            per[i].push_back(j);
        }
        m.open_dims.push_back(h);
    }
    for (std::size_t i = 0; i < k; ++i) m.point_dims.push_back(stalk(b, m.critical[i]));
    for (auto& [d, per] : basis) {
        per.resize(k + 1);
        auto& ms = m.maps[d];
        for (std::size_t i = 0; i < k; ++i) {
            FpMatrix t(per[i].size(), per[i + 1].size(), prime);
            for (std::size_t r = 0; r < per[i].size(); ++r)
                for (std::size_t c = 0; c < per[i + 1].size(); ++c)
                    if (per[i][r] == per[i + 1][c]) t.set(r, c, 1);
            ms.push_back(std::move(t));
        }
    }
    return m;
}

GradedBarcode decompose(const StratModel& m) {
    m.validate();
    const std::size_t k = m.critical.size();
    GradedBarcode out;
    std::set<int> degrees;
    for (const auto& h : m.open_dims)
        for (const auto& [d, n] : h.dims()) degrees.insert(d);
    auto lam = [&](std::size_t i) -> ExtQ {
        if (i == 0) return ExtQ::neg_inf();
        if (i == k + 1) return ExtQ::pos_inf();
        return ExtQ(m.critical[i - 1]);
    };
    for (int d : degrees) {
        // rank[i][j] = rank of the composite from stratum j down to stratum i (i <= j).
        std::vector<std::vector<long long>> rank(k + 1, std::vector<long long>(k + 1, 0));
        for (std::size_t i = 0; i <= k; ++i) {
            FpMatrix acc = FpMatrix::identity(m.open_dims[i].at(d), m.prime);
            rank[i][i] = static_cast<long long>(m.open_dims[i].at(d));
            for (std::size_t j = i + 1; j <= k; ++j) {
                acc = acc * m.maps.at(d)[j - 1];
                rank[i][j] = static_cast<long long>(acc.rank());
            }
        }
        auto r = [&](long long i, long long j) -> long long {
            if (i < 0 || j > static_cast<long long>(k)) return 0;
            return rank[i][j];
        };
        for (long long i = 0; i <= static_cast<long long>(k); ++i)
            for (long long j = i; j <= static_cast<long long>(k); ++j) {
                long long mult = r(i, j) - r(i - 1, j) - r(i, j + 1) + r(i - 1, j + 1);
                if (mult < 0) throw ValidationError("inconsistent transition ranks");
                if (mult > 0)
                    out.add(Interval::co(lam(static_cast<std::size_t>(i)), lam(static_cast<std::size_t>(j) + 1)), d,
                            static_cast<std::uint64_t>(mult));
            }
    }
    return canonicalize(out);
}

} // namespace shb

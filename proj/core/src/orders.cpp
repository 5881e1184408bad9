#include "latsnake/orders.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>
#include <tuple>

#include "latsnake/errors.hpp"

namespace latsnake {

namespace {

std::strong_ordering to_ordering(int c) {
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// sqrt(D1)/q1 vs sqrt(D2)/q2, both positive: compare D1 q2^2 with D2 q1^2.
int cmp_l(const LagrangeData& x, const LagrangeData& y) {
    return cmp(BigInt(x.D * y.q_min * y.q_min), BigInt(y.D * x.q_min * x.q_min));
}

unsigned resolve_threads(unsigned threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    return threads;
}

std::vector<std::size_t> dense_rank(std::size_t n, const std::function<int(std::size_t, std::size_t)>& cmp_fn) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return cmp_fn(x, y) < 0; });
    std::vector<std::size_t> rank(n, 0);
    std::size_t r = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0 && cmp_fn(order[k - 1], order[k]) != 0) ++r;
        rank[order[k]] = r;
    }
    return rank;
}

std::vector<std::size_t> m_ranks(const std::vector<PathRecord>& records) {
    return dense_rank(records.size(), [&](std::size_t x, std::size_t y) { return cmp(records[x].m, records[y].m); });
}

// Covers of the preorder given by dense ranks: pairs on adjacent levels.
std::vector<std::pair<std::size_t, std::size_t>> covers_of(const std::vector<std::size_t>& rank) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < rank.size(); ++x) {
        for (std::size_t y = 0; y < rank.size(); ++y) {
            if (rank[y] == rank[x] + 1) out.emplace_back(x, y);
        }
    }
    return out;
}

}  // namespace

PathRecord make_record(const LatticePath& p) {
    return {p, cf_from_path(p), m_of_path(p), lagrange_of_path(p), is_christoffel(p)};
}

std::vector<PathRecord> compute_records(std::uint32_t a, std::uint32_t b, std::uint32_t max_total, unsigned threads) {
    const PathIndex index(a, b, max_total);
    const std::uint64_t n = index.size();
    threads = static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(threads), std::max<std::uint64_t>(n, 1)));

    // Fixed chunking so the merge order never depends on scheduling.
    const std::uint64_t chunk = std::max<std::uint64_t>(1, (n + 4 * threads - 1) / (4 * threads));
    const std::uint64_t chunks = (n + chunk - 1) / chunk;
    std::vector<std::vector<PathRecord>> parts(chunks);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&] {
        for (std::uint64_t c = next++; c < chunks; c = next++) {
            try {
                std::vector<PathRecord> part;
                for (const LatticePath& p : index.range(c * chunk, std::min(n, (c + 1) * chunk))) {
                    part.push_back(make_record(p));
                }
                parts[c] = std::move(part);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<PathRecord> out;
    out.reserve(n);
    for (auto& part : parts) {
        for (auto& r : part) out.push_back(std::move(r));
    }
    return out;
}

std::vector<PathRecord> compute_all_records(std::uint32_t max_total, unsigned threads) {
    std::vector<PathRecord> out;
    for (std::uint32_t total = 3; total <= max_total; ++total) {
        for (std::uint32_t a = total / 2 + 1; a < total; ++a) {
            const std::uint32_t b = total - a;
            if (std::gcd(a, b) != 1) continue;
            for (auto& r : compute_records(a, b, max_total, threads)) out.push_back(std::move(r));
        }
    }
    return out;
}

std::strong_ordering compare_m(const LatticePath& x, const LatticePath& y) {
    return to_ordering(cmp(m_of_path(x), m_of_path(y)));
}

std::strong_ordering compare_l(const LatticePath& x, const LatticePath& y) {
    return to_ordering(cmp_l(lagrange_of_path(x), lagrange_of_path(y)));
}

std::vector<std::size_t> l_ranks(const std::vector<PathRecord>& records) {
    return dense_rank(records.size(), [&](std::size_t x, std::size_t y) { return cmp_l(records[x].l, records[y].l); });
}

Extremes extremes(const std::vector<PathRecord>& records) {
    Extremes out;
    if (records.empty()) return out;
    const std::vector<std::size_t> mr = m_ranks(records), lr = l_ranks(records);
    const std::size_t m_top = *std::max_element(mr.begin(), mr.end());
    const std::size_t l_top = *std::max_element(lr.begin(), lr.end());
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (mr[i] == 0) out.min_m.push_back(i);
        if (mr[i] == m_top) out.max_m.push_back(i);
        if (lr[i] == 0) out.min_l.push_back(i);
        if (lr[i] == l_top) out.max_l.push_back(i);
    }
    return out;
}

CollisionReport collision_scan(const std::vector<PathRecord>& records) {
    CollisionReport out;
    const std::vector<std::size_t> mr = m_ranks(records), lr = l_ranks(records);
    for (std::size_t i = 0; i < records.size(); ++i) {
        for (std::size_t j = i + 1; j < records.size(); ++j) {
            if (mr[i] == mr[j]) {
                out.m.push_back({i, j, snake_isomorphic(snake_of_path(records[i].path), snake_of_path(records[j].path))});
            }
            if (lr[i] == lr[j]) {
                out.l.push_back({i, j, band_isomorphic(band_of_path(records[i].path), band_of_path(records[j].path))});
            }
        }
    }
    return out;
}

MonotonicityReport monotonicity_scan(const std::vector<PathRecord>& records) {
    MonotonicityReport out;
    const std::vector<std::size_t> mr = m_ranks(records), lr = l_ranks(records);
    for (std::size_t x = 0; x < records.size(); ++x) {
        for (std::size_t y = 0; y < records.size(); ++y) {
            if (x == y) continue;
            if (x < y) ++out.pairs_checked;
            if (lr[x] < lr[y] && mr[x] > mr[y]) out.violations_a.emplace_back(x, y);
            if (mr[x] < mr[y] && lr[x] > lr[y]) out.violations_b.emplace_back(x, y);
        }
    }
    return out;
}

CoverReport cover_scan(const std::vector<PathRecord>& records) {
    CoverReport out;
    if (records.empty()) return out;
    const std::uint32_t a = records.front().path.a(), b = records.front().path.b();
    std::map<std::string, std::size_t> by_word;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (records[i].path.a() != a || records[i].path.b() != b) {
            throw InvalidInput("cover_scan needs records from a single D(a,b)");
        }
        by_word.emplace(records[i].path.word(), i);
    }
    const std::vector<std::size_t> mr = m_ranks(records), lr = l_ranks(records);
    for (std::size_t i = 0; i < records.size(); ++i) {
        const std::string& w = records[i].path.word();
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            if (w[k] != 'R' || w[k + 1] != 'U') continue;
            std::string swapped = w;
            std::swap(swapped[k], swapped[k + 1]);
            const auto it = by_word.find(swapped);
            if (it == by_word.end()) continue;  // UR version leaves D(a,b)
            const std::size_t j = it->second;
            SwapPair s;
            s.ru = i;
            s.ur = j;
            s.position = k;
            s.m_order = mr[i] <=> mr[j];
            s.l_order = lr[i] <=> lr[j];
            s.m_cover = mr[i] + 1 == mr[j] || mr[j] + 1 == mr[i];
            s.l_cover = lr[i] + 1 == lr[j] || lr[j] + 1 == lr[i];
            out.swaps.push_back(s);
        }
    }
    std::sort(out.swaps.begin(), out.swaps.end(), [](const SwapPair& x, const SwapPair& y) {
        return std::tie(x.ru, x.position) < std::tie(y.ru, y.position);
    });
    out.m_covers = covers_of(mr);
    out.l_covers = covers_of(lr);
    return out;
}

SupReport sup_scan(const std::vector<PathRecord>& records, std::uint32_t max_total) {
    SupReport out;
    out.max_total = max_total;
    out.paths = records.size();
    out.bound = QuadraticIrrational(1, 1, 5, 1);
    if (records.empty()) throw InvalidInput("sup_scan needs at least one path (max_total >= 3)");
    const QuadraticIrrational sqrt5 = QuadraticIrrational::sqrt_over(5, 1);
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (cmp_l(records[i].l, records[out.argmax].l) > 0) out.argmax = i;
        if (cmp_l(records[i].l, records[out.argmin].l) < 0) out.argmin = i;
        if (compare(records[i].l.value, sqrt5) == std::strong_ordering::less) out.all_at_least_sqrt5 = false;
    }
    const auto gap = compare(records[out.argmax].l.value, out.bound);
    out.gap_sign = gap == std::strong_ordering::less ? -1 : (gap == std::strong_ordering::greater ? 1 : 0);
    return out;
}

LimitReport limit_demo(unsigned k) {
    if (k < 1 || k > kMaxLimitDemoK) {
        throw CapExceeded("limit demo needs 1 <= k <= " + std::to_string(kMaxLimitDemoK));
    }
    LimitReport out;
    out.k = k;
    for (unsigned j = 1; j <= k; ++j) {
        out.word.append(j + 1, 'R');
        out.word += 'U';
    }
    out.coeffs = cf_from_path(out.word);
    const std::size_t n = out.coeffs.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (out.coeffs[i] != 2) continue;
        Rational value = evaluate(std::span<const BigInt>(out.coeffs).subspan(i));
        if (i > 0) {
            Coeffs before(out.coeffs.rend() - static_cast<std::ptrdiff_t>(i), out.coeffs.rend());
            value = value + Rational(1) / evaluate(before);
        }
        out.samples.push_back({i, std::move(value)});
    }
    if (out.samples.empty()) throw InvariantViolation("limit demo sequence has no coefficient 2");
    for (std::size_t s = 0; s < out.samples.size(); ++s) {
        if (s == 0 || out.samples[s].value > out.global_sup) out.global_sup = out.samples[s].value;
        if (s == out.samples.size() / 2 || (s > out.samples.size() / 2 && out.samples[s].value > out.tail_sup)) {
            out.tail_sup = out.samples[s].value;
        }
    }

    const Coeffs one{BigInt(1)};
    out.limit_left = from_eventually_periodic(make_coeffs({2}), one);
    out.limit_right = from_eventually_periodic(make_coeffs({0, 2}), one);
    out.limit_sum = out.limit_left + out.limit_right;
    out.alt_left = from_eventually_periodic(make_coeffs({2, 2}), one);
    out.alt_right = from_eventually_periodic(make_coeffs({0}), one);
    out.alt_sum = out.alt_left + out.alt_right;
    return out;
}

AxiomReport check_order_axioms(const std::vector<PathRecord>& records) {
    AxiomReport out;
    const std::size_t n = records.size();
    std::vector<char> lm(n * n), ll(n * n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            lm[x * n + y] = records[x].m < records[y].m;
            ll[x * n + y] = compare(records[x].l.value, records[y].l.value) == std::strong_ordering::less;
        }
    }
    auto check = [&](const std::vector<char>& rel) {
        for (std::size_t x = 0; x < n; ++x) {
            if (rel[x * n + x]) return false;
            for (std::size_t y = 0; y < n; ++y) {
                if (rel[x * n + y] && rel[y * n + x]) return false;
                for (std::size_t z = 0; z < n; ++z) {
                    if (rel[x * n + y] && rel[y * n + z] && !rel[x * n + z]) return false;
                }
            }
        }
        return true;
    };
    out.triples_checked = n * n * n;
    out.m_ok = check(lm);
    out.l_ok = check(ll);
    return out;
}

}  // namespace latsnake

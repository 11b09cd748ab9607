#include "lab5/enumerate.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace lab5 {

namespace {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), size_(n, 1) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    int find(int x) {
        int root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) {
            int next = parent_[x];
            parent_[x] = root;
            x = next;
        }
        return root;
    }

    void merge(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return;
        if (size_[rx] < size_[ry]) std::swap(rx, ry);
        parent_[ry] = rx;
        size_[rx] += size_[ry];
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

bool unoriented_homotopy(const BundleSignatures& x, const BundleSignatures& y) {
    return homotopy_equivalent(x, y, RelOrientation::same) ||
           homotopy_equivalent(x, y, RelOrientation::opposite);
}

bool unoriented_diffeo(const BundleSignatures& x, const BundleSignatures& y) {
    return diffeomorphic(x, y, RelOrientation::same) ||
           diffeomorphic(x, y, RelOrientation::opposite);
}

std::vector<std::vector<int>> classes_of(UnionFind& uf, int n) {
    std::map<int, std::vector<int>> buckets; // keyed by smallest member, ascending
    for (int i = 0; i < n; ++i) buckets[uf.find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    out.reserve(buckets.size());
    std::vector<std::pair<int, std::vector<int>>> items(buckets.begin(), buckets.end());
    std::sort(items.begin(), items.end(),
              [](const auto& x, const auto& y) { return x.second.front() < y.second.front(); });
    for (auto& item : items) out.push_back(std::move(item.second));
    return out;
}

} // namespace

FamilyReport enumerate_families(const EnumerateOptions& opts) {
    if (opts.r <= 1 || gcd64(opts.r, 6) != 1)
        throw precondition_error("enumerate: requires r > 1 coprime to 6");
    if (opts.bound < opts.r)
        throw precondition_error("enumerate: bound must be at least r");

    FamilyReport rep;
    rep.r = opts.r;
    rep.bound = opts.bound;
    rep.identify_swap = opts.identify_swap;

    for (std::int64_t a = -opts.bound; a <= opts.bound; ++a) {
        if (a == 0) continue;
        for (std::int64_t b = -opts.bound; b <= opts.bound; ++b) {
            if (b == 0 || gcd64(a, b) != opts.r) continue;
            if (opts.identify_swap && std::pair{b, a} < std::pair{a, b}) continue;
            rep.members.push_back(make_bundle(a, b));
        }
    }
    // generation order is already ascending in (a, b)

    const int n = static_cast<int>(rep.members.size());
    const std::uint64_t pair_count = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (2 * pair_count > opts.pair_cap)
        throw cap_exceeded_error("enumerate: " + std::to_string(2 * pair_count) +
                                 " pairwise decisions exceed the cap of " +
                                 std::to_string(opts.pair_cap));

    std::vector<BundleSignatures> sigs;
    sigs.reserve(static_cast<std::size_t>(n));
    for (const BundleSpec& L : rep.members) sigs.emplace_back(L);

    // all pairwise verdicts, computed by index-sliced workers and merged in
    // fixed order so the result is independent of the worker count
    std::vector<unsigned char> hom(pair_count, 0), dif(pair_count, 0);
    auto pair_index = [n](int i, int j) {
        return static_cast<std::uint64_t>(i) * (2 * n - i - 1) / 2 + (j - i - 1);
    };
    const int jobs = std::max(1, opts.jobs);
    auto worker = [&](int which) {
        for (int i = which; i < n; i += jobs) {
            for (int j = i + 1; j < n; ++j) {
                const std::uint64_t idx = pair_index(i, j);
                hom[idx] = unoriented_homotopy(sigs[i], sigs[j]) ? 1 : 0;
                dif[idx] = unoriented_diffeo(sigs[i], sigs[j]) ? 1 : 0;
            }
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }

    UnionFind hom_uf(n), dif_uf(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const std::uint64_t idx = pair_index(i, j);
            if (hom[idx]) hom_uf.merge(i, j);
            if (dif[idx]) dif_uf.merge(i, j);
        }
    }
    rep.homotopy_classes = classes_of(hom_uf, n);
    rep.diffeo_classes = classes_of(dif_uf, n);

    // one representative per |ab| within a homotopy class; two or more
    // representatives witness homotopy-equivalent, non-diffeomorphic members
    for (const auto& cls : rep.homotopy_classes) {
        std::map<std::int64_t, int> by_abs_ab;
        for (int idx : cls) {
            const std::int64_t v = std::abs(rep.members[idx].ab());
            by_abs_ab.try_emplace(v, idx);
        }
        if (by_abs_ab.size() < 2) continue;
        std::vector<int> family;
        family.reserve(by_abs_ab.size());
        for (const auto& [absab, idx] : by_abs_ab) family.push_back(idx);
        std::sort(family.begin(), family.end());
        for (std::size_t x = 0; x < family.size(); ++x) {
            for (std::size_t y = x + 1; y < family.size(); ++y) {
                const BundleSignatures& bx = sigs[static_cast<std::size_t>(family[x])];
                const BundleSignatures& by = sigs[static_cast<std::size_t>(family[y])];
                if (!unoriented_homotopy(bx, by))
                    rep.warnings.push_back("family pair (" + std::to_string(family[x]) + ", " +
                                           std::to_string(family[y]) +
                                           ") is not directly homotopy equivalent");
                if (unoriented_diffeo(bx, by))
                    rep.warnings.push_back("family pair (" + std::to_string(family[x]) + ", " +
                                           std::to_string(family[y]) +
                                           ") is unexpectedly diffeomorphic");
            }
        }
        rep.theorem1_families.push_back(std::move(family));
    }
    return rep;
}

} // namespace lab5

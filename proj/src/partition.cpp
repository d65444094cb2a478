#include "lchoose/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lchoose {

IntPartition::IntPartition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
        if (x < 1) throw std::invalid_argument("partition: parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<>());
}

int IntPartition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string IntPartition::str() const {
    // display ascending, matching the CLI literal syntax
    std::ostringstream os;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        if (it != parts.rbegin()) os << '+';
        os << *it;
    }
    return os.str();
}

IntPartition IntPartition::parse(const std::string& s) {
    std::vector<int> parts;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw std::invalid_argument("partition literal: empty part in '" + s + "'");
        size_t pos = 0;
        int v = std::stoi(cur, &pos);
        if (pos != cur.size() || v < 1)
            throw std::invalid_argument("partition literal: bad part '" + cur + "'");
        parts.push_back(v);
        cur.clear();
    };
    for (char c : s) {
        if (c == '+')
            flush();
        else if (c >= '0' && c <= '9')
            cur.push_back(c);
        else if (c != ' ')
            throw std::invalid_argument(std::string("partition literal: bad character '") + c + "'");
    }
    flush();
    return IntPartition(std::move(parts));
}

bool OrderCertificate::check(const IntPartition& lambda, const IntPartition& lambda_prime) const {
    if (blocks.size() != lambda.parts.size() || matched_part.size() != blocks.size()) return false;
    std::vector<int> used(lambda_prime.parts.size(), 0);
    std::vector<int> sums;
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) return false;
        int s = 0;
        for (int i : blocks[b]) {
            if (i < 0 || i >= static_cast<int>(lambda_prime.parts.size()) || used[i]) return false;
            used[i] = 1;
            s += lambda_prime.parts[i];
        }
        if (s < matched_part[b]) return false;
        sums.push_back(s);
    }
    if (!std::all_of(used.begin(), used.end(), [](int x) { return x == 1; })) return false;
    std::vector<int> mp = matched_part;
    std::sort(mp.begin(), mp.end(), std::greater<>());
    if (mp != lambda.parts) return false;
    return IntPartition(sums) == intermediate;
}

std::optional<RefinementCertificate> is_refinement(const IntPartition& fine,
                                                   const IntPartition& coarse) {
    if (fine.total() != coarse.total()) return std::nullopt;
    int nf = fine.q();
    std::vector<int> used(nf, 0);
    std::vector<std::vector<int>> blocks(coarse.parts.size());

    // Fill coarse parts in order; pick index-increasing subsets summing to the
    // target, skipping equal-value siblings to dodge duplicate work.
    std::function<bool(size_t)> fill = [&](size_t ci) -> bool {
        if (ci == coarse.parts.size()) return true;
        int target = coarse.parts[ci];
        std::function<bool(int, int)> pick = [&](int start, int remaining) -> bool {
            if (remaining == 0) return fill(ci + 1);
            for (int i = start; i < nf; ++i) {
                if (used[i] || fine.parts[i] > remaining) continue;
                if (i > 0 && fine.parts[i] == fine.parts[i - 1] && !used[i - 1] && i - 1 >= start)
                    continue;
                used[i] = 1;
                blocks[ci].push_back(i);
                if (pick(i + 1, remaining - fine.parts[i])) return true;
                blocks[ci].pop_back();
                used[i] = 0;
            }
            return false;
        };
        return pick(0, target);
    };
    if (!fill(0)) return std::nullopt;
    return RefinementCertificate{blocks};
}

std::optional<OrderCertificate> leq(const IntPartition& lambda, const IntPartition& lambda_prime) {
    int q = lambda.q();
    int qp = lambda_prime.q();
    if (q == 0) {
        if (qp == 0) return OrderCertificate{{}, {}, IntPartition{}};
        return std::nullopt;
    }
    if (qp < q || lambda_prime.total() < lambda.total()) return std::nullopt;

    // Distribute lambda' parts (largest first) into q blocks; blocks with equal
    // current sums are interchangeable, so only the first of each sum value is
    // tried. Accept iff all blocks non-empty and the sorted block sums dominate
    // lambda pointwise.
    std::vector<int> sums(q, 0);
    std::vector<std::vector<int>> blocks(q);
    std::optional<OrderCertificate> found;

    std::function<bool(int)> place = [&](int pi) -> bool {
        if (pi == qp) {
            std::vector<int> order(q);
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](int a, int b) { return sums[a] > sums[b]; });
            for (int i = 0; i < q; ++i)
                if (blocks[order[i]].empty() || sums[order[i]] < lambda.parts[i]) return false;
            OrderCertificate cert;
            std::vector<int> sum_list;
            for (int i = 0; i < q; ++i) {
                cert.blocks.push_back(blocks[order[i]]);
                cert.matched_part.push_back(lambda.parts[i]);
                sum_list.push_back(sums[order[i]]);
            }
            cert.intermediate = IntPartition(sum_list);
            found = std::move(cert);
            return true;
        }
        // remaining parts must be able to populate the still-empty blocks
        int empties = 0;
        for (int b = 0; b < q; ++b)
            if (blocks[b].empty()) ++empties;
        if (qp - pi < empties) return false;
        for (int b = 0; b < q; ++b) {
            bool dup = false;
            for (int c = 0; c < b; ++c)
                if (sums[c] == sums[b]) {
                    dup = true;
                    break;
                }
            if (dup) continue;
            sums[b] += lambda_prime.parts[pi];
            blocks[b].push_back(pi);
            if (place(pi + 1)) return true;
            blocks[b].pop_back();
            sums[b] -= lambda_prime.parts[pi];
        }
        return false;
    };
    place(0);
    return found;
}

namespace {

// All partitions of k into exactly q parts, each >= the matching sorted part
// of base (pointwise domination of the non-increasing forms).
void dominating_partitions(int k, int q, const std::vector<int>& base, int idx, int maxpart,
                           std::vector<int>& acc, std::vector<std::vector<int>>& out) {
    if (idx == q) {
        if (k == 0) out.push_back(acc);
        return;
    }
    int remaining_min = 0;
    for (int j = idx + 1; j < q; ++j) remaining_min += base[j];
    for (int p = std::min(k - remaining_min, maxpart); p >= base[idx]; --p) {
        acc.push_back(p);
        dominating_partitions(k - p, q, base, idx + 1, p, acc, out);
        acc.pop_back();
    }
}

// Naive refinement test: enumerate set partitions of fine's indices into
// exactly blocks_needed blocks via restricted-growth strings; compare block
// sums with coarse as multisets.
bool naive_refines(const std::vector<int>& fine, const std::vector<int>& coarse) {
    int nf = static_cast<int>(fine.size());
    int q = static_cast<int>(coarse.size());
    if (nf < q) return false;
    std::vector<int> assign(nf, 0);
    std::function<bool(int, int)> rec = [&](int i, int maxblk) -> bool {
        if (i == nf) {
            if (maxblk + 1 != q) return false;
            std::vector<int> sums(q, 0);
            for (int j = 0; j < nf; ++j) sums[assign[j]] += fine[j];
            std::sort(sums.begin(), sums.end(), std::greater<>());
            std::vector<int> c = coarse;
            std::sort(c.begin(), c.end(), std::greater<>());
            return sums == c;
        }
        for (int b = 0; b <= std::min(maxblk + 1, q - 1); ++b) {
            assign[i] = b;
            if (rec(i + 1, std::max(maxblk, b))) return true;
        }
        return false;
    };
    return rec(0, -1);
}

}  // namespace

bool brute_leq_oracle(const IntPartition& lambda, const IntPartition& lambda_prime) {
    if (lambda.total() > 12 || lambda_prime.total() > 12)
        throw std::invalid_argument("brute_leq_oracle: totals must be <= 12");
    int q = lambda.q();
    if (q == 0) return lambda_prime.q() == 0;
    if (lambda_prime.q() < q || lambda_prime.total() < lambda.total()) return false;
    std::vector<std::vector<int>> candidates;
    std::vector<int> acc;
    dominating_partitions(lambda_prime.total(), q, lambda.parts, 0, lambda_prime.total(), acc,
                          candidates);
    for (const auto& lpp : candidates)
        if (naive_refines(lambda_prime.parts, lpp)) return true;
    return false;
}

std::vector<IntPartition> enumerate_partitions(int k) {
    if (k < 1 || k > 20) throw std::invalid_argument("enumerate_partitions: need 1 <= k <= 20");
    std::vector<IntPartition> out;
    std::vector<int> acc;
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) {
            IntPartition p;
            p.parts = acc;  // already non-increasing
            out.push_back(std::move(p));
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            acc.push_back(p);
            rec(rem - p, p);
            acc.pop_back();
        }
    };
    rec(k, k);
    return out;
}

}  // namespace lchoose

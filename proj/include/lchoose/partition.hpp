#ifndef LCHOOSE_PARTITION_HPP
#define LCHOOSE_PARTITION_HPP

#include <optional>
#include <string>
#include <vector>

namespace lchoose {

/// Integer partition: a multiset of positive parts, stored non-increasing.
struct IntPartition {
    std::vector<int> parts;

    IntPartition() = default;
    explicit IntPartition(std::vector<int> p);

    int total() const;
    int q() const { return static_cast<int>(parts.size()); }
    bool operator==(const IntPartition&) const = default;
    bool operator<(const IntPartition& o) const { return parts < o.parts; }

    std::string str() const;                      // "k1+k2+..."
    static IntPartition parse(const std::string&);  // "2+2", "1+1+3"
};

/// Witness for lambda <= lambda': a grouping of lambda' parts into q blocks,
/// bijectively matched to lambda's parts, each block-sum >= its matched part.
/// The block sums form the intermediate partition lambda''.
struct OrderCertificate {
    std::vector<std::vector<int>> blocks;  // indices into lambda'.parts
    std::vector<int> matched_part;         // blocks[i] dominates lambda.parts order
    IntPartition intermediate;             // lambda'' (the block sums)

    bool check(const IntPartition& lambda, const IntPartition& lambda_prime) const;
};

/// fine refines coarse: fine's parts can be grouped into blocks whose sums are
/// exactly coarse's parts. Certificate groups fine-part indices per coarse part.
struct RefinementCertificate {
    std::vector<std::vector<int>> blocks;  // per coarse part: indices into fine
};
std::optional<RefinementCertificate> is_refinement(const IntPartition& fine,
                                                   const IntPartition& coarse);

/// The order of Definition 4: lambda <= lambda' iff lambda' refines some
/// lambda'' obtained from lambda by increasing parts (zero increase allowed).
std::optional<OrderCertificate> leq(const IntPartition& lambda,
                                    const IntPartition& lambda_prime);

/// Definition-chasing oracle: enumerate every candidate lambda'' dominating
/// lambda, then test refinement by exhaustive block-partition search.
/// Independent of leq's search; guard: both totals <= 12.
bool brute_leq_oracle(const IntPartition& lambda, const IntPartition& lambda_prime);

/// All partitions of k in canonical order. Guard: k <= 20.
std::vector<IntPartition> enumerate_partitions(int k);

}  // namespace lchoose

#endif

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hypercalc {

using Mask = std::uint32_t;

/// Family of subsets of I = {1..n}, each subset an n-bit mask (bit i-1 is i).
class SetFamily {
public:
    static constexpr unsigned max_universe = 16;

    explicit SetFamily(unsigned n, std::vector<Mask> members = {});

    unsigned universe() const noexcept { return n_; }
    Mask full() const noexcept { return (Mask{1} << n_) - 1; }
    const std::vector<Mask>& members() const noexcept { return members_; }
    bool contains(Mask m) const;
    std::size_t size() const noexcept { return members_.size(); }

    /// "{1},{1,2}" with "{}" for the empty set.
    std::string str() const;
    friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
    unsigned n_;
    std::vector<Mask> members_;
};

std::string mask_str(Mask m, unsigned n);

/// Parses a comma separated list of braced subsets such as "{1},{1,2},{}".
SetFamily parse_family(unsigned n, std::string_view src);
std::vector<Mask> parse_masks(unsigned n, std::string_view src);

/// {A : i in A}.
SetFamily principal(unsigned n, unsigned i);

enum class FilterAxiom { None, Nonempty, EmptySet, Intersection, Superset };
std::string_view to_string(FilterAxiom a);

struct FilterCheck {
    FilterAxiom violated = FilterAxiom::None;
    std::string detail;
    bool ok() const { return violated == FilterAxiom::None; }
};

/// First violated axiom: nonempty family, empty set excluded, closed under
/// intersection, closed under supersets.
FilterCheck is_filter(const SetFamily& f);

/// Every A or its complement, but not both, belongs to F. Throws NotAFilter
/// when F is not a filter. For n <= 4 the answer is re-derived by checking
/// that no proper filter strictly extends F.
bool is_ultrafilter(const SetFamily& f);

/// True when no proper filter strictly contains the filter f.
bool is_maximal_filter(const SetFamily& f);

/// Index of the unique part belonging to u. Throws NotDisjoint or
/// UnionNotInFilter when the parts do not qualify.
std::size_t partition_check(const SetFamily& u, const std::vector<Mask>& parts);

/// Every family of subsets of {1..n} passing the test, in increasing order of
/// its bit encoding. Only n <= 4 is accepted.
std::vector<SetFamily> enumerate_filters(unsigned n);
std::vector<SetFamily> enumerate_ultrafilters(unsigned n);

/// The i for which f == principal(n, i), if any.
std::optional<unsigned> principal_point(const SetFamily& f);

/// Sets with finite complement; on a finite universe that is every subset.
SetFamily frechet(unsigned n);

}  // namespace hypercalc

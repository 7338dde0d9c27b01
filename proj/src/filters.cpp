#include "hypercalc/filters.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "hypercalc/error.hpp"

namespace hypercalc {

SetFamily::SetFamily(unsigned n, std::vector<Mask> members) : n_(n), members_(std::move(members)) {
    if (n < 1 || n > max_universe) fail(ErrorKind::InvalidArgument, "universe size must be between 1 and 16");
    for (Mask m : members_) {
        if (m > full()) fail(ErrorKind::InvalidArgument, "subset mask " + std::to_string(m) + " exceeds the universe");
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SetFamily::contains(Mask m) const { return std::binary_search(members_.begin(), members_.end(), m); }

std::string mask_str(Mask m, unsigned n) {
    std::string out = "{";
    bool first = true;
    for (unsigned i = 0; i < n; ++i) {
        if (!(m >> i & 1)) continue;
        if (!first) out += ",";
        out += std::to_string(i + 1);
        first = false;
    }
    return out + "}";
}

std::string SetFamily::str() const {
    std::string out;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) out += ",";
        out += mask_str(members_[i], n_);
    }
    return out;
}

std::vector<Mask> parse_masks(unsigned n, std::string_view src) {
    std::vector<Mask> out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
    };
    skip();
    if (i == src.size()) return out;
    while (true) {
        skip();
        if (i >= src.size() || src[i] != '{') throw SyntaxError(i, "expected '{'");
        ++i;
        Mask m = 0;
        skip();
        if (i < src.size() && src[i] == '}') {
            ++i;
        } else {
            while (true) {
                skip();
                std::size_t start = i;
                while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
                if (start == i) throw SyntaxError(i, "expected an element");
                unsigned long e = std::stoul(std::string(src.substr(start, i - start)));
                if (e < 1 || e > n) throw SyntaxError(start, "element " + std::to_string(e) + " is outside {1.." + std::to_string(n) + "}");
                m |= Mask{1} << (e - 1);
                skip();
                if (i < src.size() && src[i] == ',') {
                    ++i;
                    continue;
                }
                if (i < src.size() && src[i] == '}') {
                    ++i;
                    break;
                }
                throw SyntaxError(i, "expected ',' or '}'");
            }
        }
        out.push_back(m);
        skip();
        if (i == src.size()) break;
        if (src[i] != ',') throw SyntaxError(i, "expected ','");
        ++i;
    }
    return out;
}

SetFamily parse_family(unsigned n, std::string_view src) { return SetFamily(n, parse_masks(n, src)); }

SetFamily principal(unsigned n, unsigned i) {
    if (i < 1 || i > n) fail(ErrorKind::InvalidArgument, "point " + std::to_string(i) + " is outside the universe");
    SetFamily probe(n);
    std::vector<Mask> members;
    for (Mask m = 0; m <= probe.full(); ++m) {
        if (m >> (i - 1) & 1) members.push_back(m);
    }
    return SetFamily(n, std::move(members));
}

std::string_view to_string(FilterAxiom a) {
    switch (a) {
        case FilterAxiom::None: return "none";
        case FilterAxiom::Nonempty: return "nonempty";
        case FilterAxiom::EmptySet: return "empty set excluded";
        case FilterAxiom::Intersection: return "closed under intersection";
        case FilterAxiom::Superset: return "closed under supersets";
    }
    return "?";
}

FilterCheck is_filter(const SetFamily& f) {
    const unsigned n = f.universe();
    if (f.size() == 0) return {FilterAxiom::Nonempty, "the family is empty"};
    if (f.contains(0)) return {FilterAxiom::EmptySet, "{} belongs to the family"};
    for (Mask a : f.members()) {
        for (Mask b : f.members()) {
            if (!f.contains(a & b)) {
                return {FilterAxiom::Intersection,
                        mask_str(a, n) + " and " + mask_str(b, n) + " are members but " + mask_str(a & b, n) + " is not"};
            }
        }
    }
    for (Mask a : f.members()) {
        // Walk the supersets of a by adding bits of its complement.
        Mask rest = f.full() & ~a;
        for (Mask sub = rest;; sub = (sub - 1) & rest) {
            if (!f.contains(a | sub)) {
                return {FilterAxiom::Superset, mask_str(a, n) + " is a member but its superset " + mask_str(a | sub, n) + " is not"};
            }
            if (sub == 0) break;
        }
    }
    return {};
}

bool is_maximal_filter(const SetFamily& f) {
    // F extends properly iff some A outside F meets every member of F.
    for (Mask a = 1; a <= f.full(); ++a) {
        if (f.contains(a)) continue;
        bool meets = std::all_of(f.members().begin(), f.members().end(), [&](Mask b) { return (a & b) != 0; });
        if (meets) return false;
    }
    return true;
}

bool is_ultrafilter(const SetFamily& f) {
    if (auto check = is_filter(f); !check.ok()) {
        fail(ErrorKind::NotAFilter, "axiom '" + std::string(to_string(check.violated)) + "' fails: " + check.detail);
    }
    bool ultra = true;
    for (Mask a = 0; a <= f.full() && ultra; ++a) ultra = f.contains(a) != f.contains(f.full() & ~a);
    if (f.universe() <= 4 && ultra != is_maximal_filter(f)) {
        throw std::logic_error("ultrafilter characterization disagrees with maximality for " + f.str());
    }
    return ultra;
}

std::size_t partition_check(const SetFamily& u, const std::vector<Mask>& parts) {
    const unsigned n = u.universe();
    Mask seen = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (seen & parts[i]) fail(ErrorKind::NotDisjoint, "part " + mask_str(parts[i], n) + " overlaps an earlier part");
        seen |= parts[i];
    }
    if (!u.contains(seen)) fail(ErrorKind::UnionNotInFilter, "the union " + mask_str(seen, n) + " is not in the family");
    if (!is_ultrafilter(u)) fail(ErrorKind::NotAFilter, "the family is a filter but not an ultrafilter");
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!u.contains(parts[i])) continue;
        if (hit) throw std::logic_error("two parts of a partition lie in an ultrafilter");
        hit = i;
    }
    if (!hit) throw std::logic_error("no part of a partition lies in an ultrafilter");
    return *hit;
}

namespace {

template <typename Keep>
std::vector<SetFamily> enumerate(unsigned n, Keep keep) {
    if (n < 1 || n > 4) fail(ErrorKind::InvalidArgument, "exhaustive enumeration needs 1 <= n <= 4");
    const unsigned subsets = 1u << n;
    std::vector<SetFamily> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << subsets); ++code) {
        std::vector<Mask> members;
        for (Mask m = 0; m < subsets; ++m) {
            if (code >> m & 1) members.push_back(m);
        }
        SetFamily f(n, std::move(members));
        if (keep(f)) out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

std::vector<SetFamily> enumerate_filters(unsigned n) {
    return enumerate(n, [](const SetFamily& f) { return is_filter(f).ok(); });
}

std::vector<SetFamily> enumerate_ultrafilters(unsigned n) {
    return enumerate(n, [](const SetFamily& f) { return is_filter(f).ok() && is_ultrafilter(f); });
}

std::optional<unsigned> principal_point(const SetFamily& f) {
    for (unsigned i = 1; i <= f.universe(); ++i) {
        if (f == principal(f.universe(), i)) return i;
    }
    return std::nullopt;
}

SetFamily frechet(unsigned n) {
    SetFamily probe(n);
    std::vector<Mask> all;
    for (Mask m = 0; m <= probe.full(); ++m) all.push_back(m);
    return SetFamily(n, std::move(all));
}

}  // namespace hypercalc

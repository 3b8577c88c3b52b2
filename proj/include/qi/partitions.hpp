#ifndef QI_PARTITIONS_HPP
#define QI_PARTITIONS_HPP

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qi/errors.hpp"
#include "qi/rational.hpp"

namespace qi {

// A multiset of positive integers, canonically sorted ascending. Used both
// for partitions of n (pairing table keys) and for wheel-index multisets.
using Partition = std::vector<int>;

inline Partition make_partition(std::vector<int> parts) {
    for (int p : parts)
        if (p < 1) throw DomainError("partition parts must be >= 1");
    std::sort(parts.begin(), parts.end());
    return parts;
}

inline int partition_weight(const Partition& p) {
    int w = 0;
    for (int v : p) w += v;
    return w;
}

inline std::map<int, int> part_multiplicities(const Partition& p) {
    std::map<int, int> m;
    for (int v : p) ++m[v];
    return m;
}

// All partitions of n, each sorted ascending, in deterministic order.
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw DomainError("cannot partition a negative integer");
    std::vector<Partition> out;
    Partition current;
    // parts non-decreasing from `minimum`
    auto rec = [&](auto&& self, int remaining, int minimum) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int p = minimum; p <= remaining; ++p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    rec(rec, n, 1);
    return out;
}

// product over repeated parts of mult!, the automorphism factor of the multiset
inline Integer multiset_symmetry_factor(const Partition& p) {
    Integer f(1);
    for (const auto& [part, mult] : part_multiplicities(p)) f *= factorial(static_cast<unsigned>(mult));
    return f;
}

inline std::string partition_key(const Partition& p) {
    std::ostringstream out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out << "+";
        out << p[i];
    }
    return out.str();
}

inline Partition parse_partition_key(const std::string& key) {
    Partition p;
    std::size_t pos = 0;
    while (pos < key.size()) {
        std::size_t next = key.find('+', pos);
        if (next == std::string::npos) next = key.size();
        const std::string piece = key.substr(pos, next - pos);
        if (piece.empty()) throw ParseError("empty part in partition key '" + key + "'");
        for (char c : piece)
            if (c < '0' || c > '9') throw ParseError("bad partition key '" + key + "'");
        p.push_back(std::stoi(piece));
        pos = next + 1;
    }
    if (p.empty()) throw ParseError("empty partition key");
    return make_partition(std::move(p));
}

}  // namespace qi

#endif

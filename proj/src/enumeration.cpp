#include "unigf/enumeration.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace unigf {

int LLPartition::n() const {
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    return n;
}

std::string to_string(const LLPartition& p) {
    std::string s;
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        if (i > 0) s += '/';
        for (std::size_t j = 0; j < p.blocks[i].size(); ++j) {
            if (j > 0) s += ',';
            s += std::to_string(p.blocks[i][j]);
        }
    }
    return s;
}

LLPartition parse_partition(std::string_view text) {
    LLPartition p;
    const bool shorthand = text.find(',') == std::string_view::npos;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto slash = text.find('/', start);
        const auto piece = text.substr(start, slash == std::string_view::npos ? std::string_view::npos : slash - start);
        if (piece.empty()) throw std::invalid_argument("empty block in partition '" + std::string(text) + "'");
        std::vector<int> block;
        if (shorthand) {
            for (char c : piece) {
                if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
                    throw std::invalid_argument("bad element '" + std::string(1, c) + "' in partition");
                block.push_back(c - '0');
            }
        } else {
            std::size_t s = 0;
            while (s <= piece.size()) {
                const auto comma = piece.find(',', s);
                const auto num = piece.substr(s, comma == std::string_view::npos ? std::string_view::npos : comma - s);
                if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) {
                        return std::isdigit(static_cast<unsigned char>(c));
                    }))
                    throw std::invalid_argument("bad element '" + std::string(num) + "' in partition");
                block.push_back(std::stoi(std::string(num)));
                if (comma == std::string_view::npos) break;
                s = comma + 1;
            }
        }
        p.blocks.push_back(std::move(block));
        if (slash == std::string_view::npos) break;
        start = slash + 1;
    }

    const int n = p.n();
    if (shorthand && n > 9) throw std::invalid_argument("digit shorthand is limited to n <= 9");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const auto& b : p.blocks) {
        for (int e : b) {
            if (e < 1 || e > n || seen[static_cast<std::size_t>(e)])
                throw std::invalid_argument("partition elements must cover 1.." + std::to_string(n) + " exactly once");
            seen[static_cast<std::size_t>(e)] = true;
        }
    }
    return p;
}

namespace {

// Number of right-to-left minima strictly greater than `floor`.
template <typename Seq>
int right_to_left_minima_above(const Seq& seq, int floor) {
    int count = 0;
    int running_min = std::numeric_limits<int>::max();
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
        if (*it < running_min) {
            running_min = *it;
            if (*it > floor) ++count;
        }
    }
    return count;
}

std::vector<int> openers(const LLPartition& p) {
    std::vector<int> o;
    o.reserve(p.blocks.size());
    for (const auto& b : p.blocks) o.push_back(*std::min_element(b.begin(), b.end()));
    return o;
}

}  // namespace

int block_rle(std::span<const int> block) {
    if (block.empty()) return 0;
    const int lo = *std::min_element(block.begin(), block.end());
    return right_to_left_minima_above(block, lo);
}

int stat_rlb(const LLPartition& p) { return right_to_left_minima_above(openers(p), 1); }

int stat_nsb(const LLPartition& p) { return p.k() - 1 - stat_rlb(p); }

int stat_rle(const LLPartition& p) {
    int r = 0;
    for (const auto& b : p.blocks) r += block_rle(b);
    return r;
}

int stat_nse(const LLPartition& p) {
    int r = 0;
    for (const auto& b : p.blocks) r += static_cast<int>(b.size()) - 1 - block_rle(b);
    return r;
}

StatVector stats(const LLPartition& p) {
    StatVector s;
    s.rlb = stat_rlb(p);
    s.nsb = p.k() - 1 - s.rlb;
    s.rle = stat_rle(p);
    s.nse = p.n() - p.k() - s.rle;
    return s;
}

std::vector<std::vector<int>> restricted_growth_strings(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 1 || k > n) return out;
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    // rgs[0] = 0; rgs[i] <= max(rgs[0..i-1]) + 1.
    auto rec = [&](auto&& self, int i, int used) -> void {
        if (used + (n - i) < k) return;
        if (i == n) {
            if (used == k) out.push_back(rgs);
            return;
        }
        for (int v = 0; v <= used && v < k; ++v) {
            rgs[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, std::max(used, v + 1));
        }
    };
    rec(rec, 1, 1);
    return out;
}

void for_each_llp(int n, int k, const LLPartitionVisitor& visit) {
    if (k < 1 || k > n) return;
    LLPartition current;
    current.blocks.resize(static_cast<std::size_t>(k));
    std::vector<std::vector<int>> base(static_cast<std::size_t>(k));
    std::vector<int> order(static_cast<std::size_t>(k));

    auto inner = [&](auto&& self, std::size_t i) -> void {
        if (i == current.blocks.size()) {
            visit(current);
            return;
        }
        auto& b = current.blocks[i];
        do {
            self(self, i + 1);
        } while (std::next_permutation(b.begin(), b.end()));
    };

    for (const auto& rgs : restricted_growth_strings(n, k)) {
        for (auto& b : base) b.clear();
        for (int e = 1; e <= n; ++e) base[static_cast<std::size_t>(rgs[static_cast<std::size_t>(e - 1)])].push_back(e);
        std::iota(order.begin(), order.end(), 0);
        do {
            for (std::size_t i = 0; i < order.size(); ++i) current.blocks[i] = base[static_cast<std::size_t>(order[i])];
            inner(inner, 0);
        } while (std::next_permutation(order.begin(), order.end()));
    }
}

std::vector<LLPartition> enumerate_llp(int n, int k) {
    std::vector<LLPartition> out;
    for_each_llp(n, k, [&](const LLPartition& p) { out.push_back(p); });
    return out;
}

int min_right_moves(std::span<const int> seq) {
    const std::size_t len = seq.size();
    if (len > 8) throw std::invalid_argument("min_right_moves: oracle limited to length <= 8");
    int best = static_cast<int>(len);
    // `moved` is a bitmask of entries taken out and reinserted further right.
    // Feasible iff the kept entries are increasing and every moved entry
    // exceeds all kept entries to its left (it cannot travel left past them).
    for (unsigned moved = 0; moved < (1u << len); ++moved) {
        const int cost = std::popcount(moved);
        if (cost >= best) continue;
        bool ok = true;
        int last_kept = std::numeric_limits<int>::min();
        for (std::size_t i = 0; i < len && ok; ++i) {
            if (moved & (1u << i)) {
                if (seq[i] < last_kept) ok = false;
            } else {
                if (seq[i] < last_kept) ok = false;
                last_kept = seq[i];
            }
        }
        if (ok) best = cost;
    }
    return best;
}

MPoly s_poly_bruteforce(int n, int k, bool force) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("s_poly_bruteforce: requires 1 <= k <= n");
    if (n > kEnumerationGuard && !force)
        throw std::invalid_argument("s_poly_bruteforce: n > " + std::to_string(kEnumerationGuard) +
                                    " needs the force flag");

    // counts[((rlb * n + nsb) * n + rle) * n + nse]
    const auto dim = static_cast<std::size_t>(n);
    std::vector<std::uint64_t> counts(dim * dim * dim * dim, 0);
    std::vector<int> opener_buf(static_cast<std::size_t>(k));
    for_each_llp(n, k, [&](const LLPartition& p) {
        int rle = 0;
        for (std::size_t i = 0; i < p.blocks.size(); ++i) {
            const auto& b = p.blocks[i];
            opener_buf[i] = *std::min_element(b.begin(), b.end());
            rle += right_to_left_minima_above(b, opener_buf[i]);
        }
        const int rlb = right_to_left_minima_above(opener_buf, 1);
        const int nsb = k - 1 - rlb;
        const int nse = n - k - rle;
        ++counts[((static_cast<std::size_t>(rlb) * dim + static_cast<std::size_t>(nsb)) * dim +
                  static_cast<std::size_t>(rle)) *
                     dim +
                 static_cast<std::size_t>(nse)];
    });

    MPoly s;
    for (std::size_t idx = 0; idx < counts.size(); ++idx) {
        if (counts[idx] == 0) continue;
        std::size_t r = idx;
        Monomial m{};
        m[static_cast<std::size_t>(Symbol::mu)] = static_cast<std::uint16_t>(r % dim);
        r /= dim;
        m[static_cast<std::size_t>(Symbol::lambda)] = static_cast<std::uint16_t>(r % dim);
        r /= dim;
        m[static_cast<std::size_t>(Symbol::beta)] = static_cast<std::uint16_t>(r % dim);
        r /= dim;
        m[static_cast<std::size_t>(Symbol::alpha)] = static_cast<std::uint16_t>(r);
        s.add_term(m, BigInt(counts[idx]));
    }
    return s;
}

MPoly s_poly_rec(int n, int k) {
    if (n < 1 || k < 1 || k > n) return {};
    const MPoly a = MPoly::var(Symbol::alpha);
    const MPoly b = MPoly::var(Symbol::beta);
    const MPoly l = MPoly::var(Symbol::lambda);
    const MPoly mu = MPoly::var(Symbol::mu);
    // table[r][c] = S(r, c) for the rows computed so far.
    std::vector<std::vector<MPoly>> table(static_cast<std::size_t>(n) + 1);
    table[1].assign(2, MPoly());
    table[1][1] = MPoly(1);
    for (int r = 2; r <= n; ++r) {
        auto& row = table[static_cast<std::size_t>(r)];
        const auto& prev = table[static_cast<std::size_t>(r - 1)];
        row.assign(static_cast<std::size_t>(r) + 1, MPoly());
        for (int c = 1; c <= r; ++c) {
            MPoly v;
            if (c - 1 >= 1) v += (a + b * BigInt(c - 1)) * prev[static_cast<std::size_t>(c - 1)];
            if (c <= r - 1) v += (l * BigInt(c) + mu * BigInt(r - 1)) * prev[static_cast<std::size_t>(c)];
            row[static_cast<std::size_t>(c)] = std::move(v);
        }
    }
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace unigf

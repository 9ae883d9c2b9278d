#include "qsr/gates.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qsr {

namespace {

void check_site(const QuditRegister& reg, int site) {
    if (site < 0 || site >= reg.n_sites())
        throw argument_error("site " + std::to_string(site) + " outside register");
}

void check_pair(const QuditRegister& reg, int a, int b) {
    check_site(reg, a);
    check_site(reg, b);
    if (a == b) throw argument_error("two-site gate needs distinct sites");
}

// Applies a level permutation to one site, fiber by fiber.
void apply_level_perm(QuditRegister& reg, int site, std::span<const int> perm) {
    const std::size_t d = static_cast<std::size_t>(reg.d());
    const std::size_t st = reg.stride(site);
    const std::size_t block = st * d;
    std::vector<cdouble> tmp(d);
    auto& amp = reg.data();
    for (std::size_t hi = 0; hi < reg.dim(); hi += block) {
        for (std::size_t lo = 0; lo < st; ++lo) {
            const std::size_t base = hi + lo;
            for (std::size_t l = 0; l < d; ++l) tmp[l] = amp[base + l * st];
            for (std::size_t l = 0; l < d; ++l)
                amp[base + static_cast<std::size_t>(perm[l]) * st] = tmp[l];
        }
    }
}

// Applies, for every control level c, the target-level permutation perm(c).
// The control level is constant along each target fiber since the sites differ.
template <typename PermOfControl>
void apply_controlled_perm(QuditRegister& reg, int control, int target, PermOfControl&& perm) {
    const std::size_t d = static_cast<std::size_t>(reg.d());
    const std::size_t st = reg.stride(target);
    const std::size_t sc = reg.stride(control);
    const std::size_t block = st * d;
    std::vector<cdouble> tmp(d);
    auto& amp = reg.data();
    for (std::size_t hi = 0; hi < reg.dim(); hi += block) {
        for (std::size_t lo = 0; lo < st; ++lo) {
            const std::size_t base = hi + lo;
            const int c = static_cast<int>(base / sc % d);
            for (std::size_t l = 0; l < d; ++l) tmp[l] = amp[base + l * st];
            for (std::size_t l = 0; l < d; ++l)
                amp[base + static_cast<std::size_t>(perm(c, static_cast<int>(l))) * st] = tmp[l];
        }
    }
}

// 2x2 rotation of the pair {|s>, |s+1>} on one site.
void apply_pair_unitary(QuditRegister& reg, int site, int s, const Unitary2& u) {
    const std::size_t d = static_cast<std::size_t>(reg.d());
    const std::size_t st = reg.stride(site);
    const std::size_t block = st * d;
    auto& amp = reg.data();
    const std::size_t off = static_cast<std::size_t>(s) * st;
    for (std::size_t hi = 0; hi < reg.dim(); hi += block) {
        for (std::size_t lo = 0; lo < st; ++lo) {
            const std::size_t i0 = hi + lo + off;
            const std::size_t i1 = i0 + st;
            const cdouble a0 = amp[i0];
            const cdouble a1 = amp[i1];
            amp[i0] = u.a00 * a0 + u.a01 * a1;
            amp[i1] = u.a10 * a0 + u.a11 * a1;
        }
    }
}

int mod_shift(int level, int delta, int d) {
    int v = (level + delta) % d;
    if (v < 0) v += d;
    return v;
}

void check_bus(int k, const BusConfig& cfg) {
    if (k < 1 || k > cfg.n_buses)
        throw argument_error("bus " + std::to_string(k) + " outside 1.." +
                             std::to_string(cfg.n_buses));
}

void check_sign(int sign) {
    if (sign != 1 && sign != -1) throw argument_error("sign must be +1 or -1");
}

void check_block_offset(int s, const QuditRegister& reg, const BusConfig& cfg) {
    const bool admissible = s >= 0 && s % 2 == 0 && s <= cfg.max_value() - 1;
    if (!admissible)
        throw argument_error("block offset " + std::to_string(s) +
                             " is not an admissible routing offset");
    if (s + 1 >= reg.d()) throw argument_error("block offset exceeds local dimension");
}

}  // namespace

void apply_single(QuditRegister& reg, int site, const Unitary2& u) {
    check_site(reg, site);
    if (!u.is_unitary()) throw argument_error("matrix is not unitary");
    apply_pair_unitary(reg, site, 0, u);
}

void apply_shift(QuditRegister& reg, int site, int delta) {
    check_site(reg, site);
    const int d = reg.d();
    std::vector<int> perm(static_cast<std::size_t>(d));
    for (int l = 0; l < d; ++l) perm[static_cast<std::size_t>(l)] = mod_shift(l, delta, d);
    apply_level_perm(reg, site, perm);
}

void apply_cx(QuditRegister& reg, int control, int target) {
    check_pair(reg, control, target);
    apply_controlled_perm(reg, control, target, [](int c, int l) {
        if (c != 1) return l;
        if (l == 0) return 1;
        if (l == 1) return 0;
        return l;
    });
}

void apply_swap(QuditRegister& reg, int a, int b) {
    check_pair(reg, a, b);
    const std::size_t d = static_cast<std::size_t>(reg.d());
    const std::size_t sa = reg.stride(a);
    const std::size_t sb = reg.stride(b);
    auto& amp = reg.data();
    for (std::size_t i = 0; i < reg.dim(); ++i) {
        const std::size_t la = i / sa % d;
        const std::size_t lb = i / sb % d;
        if (la < lb) {
            const std::size_t j = i + (lb - la) * sa - (lb - la) * sb;
            std::swap(amp[i], amp[j]);
        }
    }
}

void apply_cbl(QuditRegister& reg, int control, int target, int k, int sign,
               const BusConfig& cfg) {
    check_pair(reg, control, target);
    check_bus(k, cfg);
    check_sign(sign);
    const int d = reg.d();
    const int delta = sign * cfg.offset(k);
    apply_controlled_perm(reg, control, target, [d, delta](int c, int l) {
        return digit(c, 0) ? mod_shift(l, delta, d) : l;
    });
}

void apply_bcp(QuditRegister& reg, int source, int target, int k, int sign,
               const BusConfig& cfg) {
    check_pair(reg, source, target);
    check_bus(k, cfg);
    check_sign(sign);
    const int d = reg.d();
    const int delta = sign * cfg.offset(k);
    apply_controlled_perm(reg, source, target, [d, delta, k](int c, int l) {
        return digit(c, k) ? mod_shift(l, delta, d) : l;
    });
}

void apply_block(QuditRegister& reg, int site, int block_offset, const Unitary2& u,
                 const BusConfig& cfg) {
    check_site(reg, site);
    check_block_offset(block_offset, reg, cfg);
    if (!u.is_unitary()) throw argument_error("matrix is not unitary");
    apply_pair_unitary(reg, site, block_offset, u);
}

void apply_cur(QuditRegister& reg, int site, int k, const Unitary2& u, const BusConfig& cfg) {
    check_site(reg, site);
    check_bus(k, cfg);
    if (!u.is_unitary()) throw argument_error("matrix is not unitary");
    for (int s = 0; s <= cfg.max_value() - 1; s += 2)
        if (digit(s, k)) apply_pair_unitary(reg, site, s, u);
}

void apply_cxr(QuditRegister& reg, int site, int k, const BusConfig& cfg) {
    apply_cur(reg, site, k, u2_x(), cfg);
}

void apply_boolean_target(QuditRegister& reg, int site, std::span<const std::uint8_t> table,
                          const Unitary2& u, const BusConfig& cfg) {
    check_site(reg, site);
    if (static_cast<int>(table.size()) != (1 << cfg.n_buses))
        throw argument_error("truth table must have 2^K entries");
    if (!u.is_unitary()) throw argument_error("matrix is not unitary");
    for (int s = 0; s <= cfg.max_value() - 1; s += 2)
        if (table[static_cast<std::size_t>(s >> 1)]) apply_pair_unitary(reg, site, s, u);
}

}  // namespace qsr

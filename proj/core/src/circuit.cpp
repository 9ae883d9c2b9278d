#include "qsr/circuit.hpp"

#include <algorithm>

#include "qsr/errors.hpp"

#include <nlohmann/json.hpp>

namespace qsr {

std::string to_string(GateKind kind) {
    switch (kind) {
        case GateKind::SingleSite: return "SingleSite";
        case GateKind::CX: return "CX";
        case GateKind::Shift: return "Shift";
        case GateKind::CBL: return "CBL";
        case GateKind::BCP: return "BCP";
        case GateKind::CXR: return "CXR";
        case GateKind::CUR: return "CUR";
        case GateKind::Block: return "Block";
        case GateKind::BooleanTarget: return "BooleanTarget";
        case GateKind::Swap: return "Swap";
    }
    return "?";
}

bool is_two_site(GateKind kind) {
    switch (kind) {
        case GateKind::CX:
        case GateKind::CBL:
        case GateKind::BCP:
        case GateKind::Swap: return true;
        default: return false;
    }
}

bool is_routing_primitive(GateKind kind) {
    switch (kind) {
        case GateKind::Shift:
        case GateKind::CBL:
        case GateKind::BCP:
        case GateKind::CXR:
        case GateKind::CUR:
        case GateKind::Block:
        case GateKind::BooleanTarget: return true;
        default: return false;
    }
}

GateRecord make_single(int site, const Unitary2& u) {
    GateRecord g;
    g.kind = GateKind::SingleSite;
    g.sites = {site, -1};
    g.unitary = u;
    return g;
}

GateRecord make_cx(int control, int target) {
    GateRecord g;
    g.kind = GateKind::CX;
    g.sites = {control, target};
    return g;
}

GateRecord make_shift(int site, int delta) {
    GateRecord g;
    g.kind = GateKind::Shift;
    g.sites = {site, -1};
    g.delta = delta;
    return g;
}

GateRecord make_cbl(int control, int target, int k, int sign) {
    GateRecord g;
    g.kind = GateKind::CBL;
    g.sites = {control, target};
    g.bus = k;
    g.sign = sign;
    return g;
}

GateRecord make_bcp(int source, int target, int k, int sign) {
    GateRecord g;
    g.kind = GateKind::BCP;
    g.sites = {source, target};
    g.bus = k;
    g.sign = sign;
    return g;
}

GateRecord make_cxr(int site, int k) {
    GateRecord g;
    g.kind = GateKind::CXR;
    g.sites = {site, -1};
    g.bus = k;
    return g;
}

GateRecord make_cur(int site, int k, const Unitary2& u) {
    GateRecord g;
    g.kind = GateKind::CUR;
    g.sites = {site, -1};
    g.bus = k;
    g.unitary = u;
    return g;
}

GateRecord make_block(int site, int block_offset, const Unitary2& u) {
    GateRecord g;
    g.kind = GateKind::Block;
    g.sites = {site, -1};
    g.block_offset = block_offset;
    g.unitary = u;
    return g;
}

GateRecord make_boolean_target(int site, std::vector<std::uint8_t> table, const Unitary2& u) {
    GateRecord g;
    g.kind = GateKind::BooleanTarget;
    g.sites = {site, -1};
    g.table = std::move(table);
    g.unitary = u;
    return g;
}

GateRecord make_swap(int a, int b) {
    GateRecord g;
    g.kind = GateKind::Swap;
    g.sites = {a, b};
    return g;
}

void validate_circuit(const Circuit& c) {
    if (c.n_sites < 1) throw config_error("circuit needs at least one site");
    for (const auto& g : c.gates) {
        const int a = g.sites[0];
        const int b = g.sites[1];
        if (a < 0 || a >= c.n_sites) throw config_error("gate references site outside register");
        if (is_two_site(g.kind)) {
            if (b < 0 || b >= c.n_sites)
                throw config_error("gate references site outside register");
            if (a == b) throw config_error("two-site gate with identical sites");
        }
        if ((g.kind == GateKind::CBL || g.kind == GateKind::BCP || g.kind == GateKind::CXR ||
             g.kind == GateKind::CUR) &&
            (g.bus < 1 || g.bus > c.cfg.n_buses))
            throw config_error("gate bus index outside configured bus count");
    }
}

void apply_gate(QuditRegister& reg, const GateRecord& g, const BusConfig& cfg) {
    switch (g.kind) {
        case GateKind::SingleSite: apply_single(reg, g.sites[0], g.unitary); return;
        case GateKind::CX: apply_cx(reg, g.sites[0], g.sites[1]); return;
        case GateKind::Shift: apply_shift(reg, g.sites[0], g.delta); return;
        case GateKind::CBL: apply_cbl(reg, g.sites[0], g.sites[1], g.bus, g.sign, cfg); return;
        case GateKind::BCP: apply_bcp(reg, g.sites[0], g.sites[1], g.bus, g.sign, cfg); return;
        case GateKind::CXR: apply_cxr(reg, g.sites[0], g.bus, cfg); return;
        case GateKind::CUR: apply_cur(reg, g.sites[0], g.bus, g.unitary, cfg); return;
        case GateKind::Block: apply_block(reg, g.sites[0], g.block_offset, g.unitary, cfg); return;
        case GateKind::BooleanTarget:
            apply_boolean_target(reg, g.sites[0], g.table, g.unitary, cfg);
            return;
        case GateKind::Swap: apply_swap(reg, g.sites[0], g.sites[1]); return;
    }
}

void run(QuditRegister& reg, const Circuit& c) {
    validate_circuit(c);
    if (reg.n_sites() != c.n_sites || reg.d() != c.cfg.d)
        throw argument_error("register shape does not match circuit");
    for (const auto& g : c.gates) apply_gate(reg, g, c.cfg);
}

Schedule schedule(const Circuit& c) {
    validate_circuit(c);
    Schedule sched;
    std::vector<int> last_moment(static_cast<std::size_t>(c.n_sites), -1);
    for (int gi = 0; gi < static_cast<int>(c.gates.size()); ++gi) {
        const auto& g = c.gates[static_cast<std::size_t>(gi)];
        int moment = last_moment[static_cast<std::size_t>(g.sites[0])] + 1;
        if (is_two_site(g.kind))
            moment = std::max(moment, last_moment[static_cast<std::size_t>(g.sites[1])] + 1);
        if (moment == static_cast<int>(sched.moments.size())) sched.moments.emplace_back();
        sched.moments[static_cast<std::size_t>(moment)].push_back(gi);
        last_moment[static_cast<std::size_t>(g.sites[0])] = moment;
        if (is_two_site(g.kind)) last_moment[static_cast<std::size_t>(g.sites[1])] = moment;
    }
    return sched;
}

namespace {

nlohmann::ordered_json unitary_json(const Unitary2& u) {
    auto cplx = [](const cdouble& z) { return nlohmann::ordered_json::array({z.real(), z.imag()}); };
    return nlohmann::ordered_json::array(
        {nlohmann::ordered_json::array({cplx(u.a00), cplx(u.a01)}),
         nlohmann::ordered_json::array({cplx(u.a10), cplx(u.a11)})});
}

}  // namespace

std::string circuit_json(const Circuit& c) {
    nlohmann::ordered_json j;
    j["n_sites"] = c.n_sites;
    j["d"] = c.cfg.d;
    j["n_buses"] = c.cfg.n_buses;
    auto& gates = j["gates"] = nlohmann::ordered_json::array();
    for (const auto& g : c.gates) {
        nlohmann::ordered_json rec;
        rec["kind"] = to_string(g.kind);
        if (is_two_site(g.kind))
            rec["sites"] = {g.sites[0], g.sites[1]};
        else
            rec["sites"] = {g.sites[0]};
        switch (g.kind) {
            case GateKind::CBL:
            case GateKind::BCP:
                rec["k"] = g.bus;
                rec["sign"] = g.sign;
                break;
            case GateKind::CXR: rec["k"] = g.bus; break;
            case GateKind::CUR:
                rec["k"] = g.bus;
                rec["unitary"] = unitary_json(g.unitary);
                break;
            case GateKind::Shift: rec["delta"] = g.delta; break;
            case GateKind::Block:
                rec["s"] = g.block_offset;
                rec["unitary"] = unitary_json(g.unitary);
                break;
            case GateKind::SingleSite: rec["unitary"] = unitary_json(g.unitary); break;
            case GateKind::BooleanTarget:
                rec["table"] = g.table;
                rec["unitary"] = unitary_json(g.unitary);
                break;
            default: break;
        }
        gates.push_back(std::move(rec));
    }
    return j.dump(2);
}

}  // namespace qsr

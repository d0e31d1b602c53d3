#include "mcgdim/criterion.hpp"

#include <algorithm>

#include "mcgdim/arith.hpp"

namespace mcgdim {

namespace {

Witness trivial_witness(int genus) {
    Witness w;
    w.order = 1;
    OrbifoldSignature sig;
    sig.orientable = false;
    sig.genus = genus;
    w.signature = canonical(sig);
    w.vcd_weyl = vcd_weyl(w.signature);
    w.lambda_bound = 0;
    w.rh_only = false;
    return w;
}

void sort_witnesses(std::vector<Witness>& ws) {
    std::sort(ws.begin(), ws.end(), [](const Witness& a, const Witness& b) {
        if (a.order != b.order) return a.order < b.order;
        return signature_less(a.signature, b.signature);
    });
}

} // namespace

CriterionReport check_criterion(int genus, CriterionMode mode,
                                const std::vector<ActionRow>* actions,
                                std::optional<std::int64_t> max_order) {
    if (genus < 3) throw domain_error("criterion requires genus >= 3");
    CriterionReport rep;
    rep.genus = genus;
    rep.mode = mode;
    rep.vcd_target = 2 * genus - 5;

    std::vector<Witness> candidates{trivial_witness(genus)};
    rep.m_star = candidates.front().vcd_weyl;

    if (mode == CriterionMode::PureRH) {
        const std::int64_t ceiling = max_order.value_or(default_order_ceiling(genus));
        rep.max_order = ceiling;
        for (std::int64_t order = 2; order <= ceiling; ++order) {
            const int lam = prime_factor_count(order);
            scan_shapes(
                genus, order,
                [&](const SignatureShape& shape) {
                    return vcd_weyl(shape) + lam >= rep.m_star;
                },
                [&](const SignatureShape& shape, const OrbifoldSignature& sig) {
                    const int v = vcd_weyl(shape);
                    if (v + lam > rep.m_star) rep.m_star = v + lam;
                    candidates.push_back({order, sig, v, lam, true});
                });
        }
    } else {
        if (actions == nullptr) throw domain_error("database mode requires action rows");
        rep.max_order = 1;
        bool any = false;
        for (const ActionRow& row : *actions) {
            if (row.genus != genus) continue;
            any = true;
            rep.max_order = std::max(rep.max_order, row.order);
            const int omega = prime_factor_count(row.order);
            const int lam = row.lambda_max ? std::min(omega, *row.lambda_max) : omega;
            const int v = vcd_weyl(row.signature);
            if (v + lam > rep.m_star) rep.m_star = v + lam;
            candidates.push_back({row.order, row.signature, v, lam, false});
        }
        if (!any)
            throw domain_error("database mode has no rows for genus " +
                               std::to_string(genus));
    }

    for (Witness& w : candidates)
        if (w.vcd_weyl + w.lambda_bound == rep.m_star) rep.witnesses.push_back(std::move(w));
    sort_witnesses(rep.witnesses);

    rep.cd_upper = rep.m_star;
    rep.gd_upper = std::max(3, rep.m_star);
    rep.equal = rep.m_star == rep.vcd_target;
    rep.ceiling_hit = false;
    if (mode == CriterionMode::PureRH)
        for (const Witness& w : rep.witnesses)
            if (w.order == rep.max_order) rep.ceiling_hit = true;
    return rep;
}

bool check_pair_inequality(int vcd_wf, std::int64_t order, const Rational& epsilon,
                           int genus) {
    if (order < 1) throw domain_error("order must be >= 1");
    (void)genus;  // the inequality does not involve the ambient genus
    Rational lhs = Rational(vcd_wf) + Rational(order, 2);
    Rational rhs = Rational(order) * (Rational(vcd_wf) - epsilon) - Rational(1);
    return lhs <= rhs;
}

Conclusion conclude(int genus, const CriterionReport* report) {
    if (genus < 1) throw domain_error("genus must be >= 1");
    if (genus <= 2) return {0, {0, 0}, {0, 0}, true};
    if (genus == 3) return {1, {1, 1}, {1, 1}, true};
    if (report == nullptr)
        throw domain_error("conclusions for genus >= 4 require a criterion report");
    if (report->genus != genus)
        throw domain_error("criterion report is for a different genus");
    Conclusion c;
    c.vcd = 2 * genus - 5;
    c.cd_bounds = {c.vcd, report->cd_upper};
    c.gd_bounds = {c.vcd, report->gd_upper};
    c.equal = report->cd_upper == c.vcd;
    return c;
}

} // namespace mcgdim

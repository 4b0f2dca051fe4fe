#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nsg/classification.hpp"
#include "nsg/master_equation.hpp"
#include "nsg/med.hpp"
#include "nsg/resolution.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

using Json = nlohmann::json;

// ---- JSON helpers (numbers that fit 64 bits stay numbers, larger values
// ---- become decimal strings; multisets/polynomials are sorted pair lists)

inline Json to_json(const Integer& v) {
    if (fits_int64(v)) return v.convert_to<std::int64_t>();
    return v.str();
}

inline Integer integer_from_json(const Json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    return Integer(j.get<std::int64_t>());
}

inline Json to_json(const IntMultiset& m) {
    Json out = Json::array();
    for (const auto& [v, k] : m.counts()) out.push_back({to_json(v), to_json(k)});
    return out;
}

inline IntMultiset multiset_from_json(const Json& j) {
    IntMultiset out;
    for (const auto& p : j) out.add(integer_from_json(p[0]), integer_from_json(p[1]));
    return out;
}

inline Json to_json(const IntPolynomial& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) out.push_back({to_json(e), to_json(c)});
    return out;
}

inline IntPolynomial polynomial_from_json(const Json& j) {
    IntPolynomial out;
    for (const auto& p : j)
        out = out + IntPolynomial::monomial(integer_from_json(p[0]),
                                            integer_from_json(p[1]));
    return out;
}

// ---- report blocks

struct PairingBlock {
    bool ok = false;
    bool fixed_point_present = false;
    bool parity_ok = false;
    std::string witness;  // offending element when the involution fails
};

struct ResolutionBlock {
    std::vector<Integer> betti_numbers;
    std::vector<IntMultiset> betti_degrees;
    bool kpolynomial_ok = false;
    bool lemma1_ok = false;
    std::optional<bool> bet2_ok;  // alternating sum; not defined for edim 1
    bool bet22_ok = false;
    bool disjointness_ok = false;
};

struct MasterBlock {
    Integer ell = 0;
    Integer wp = 0;
    Integer delta = 0;
    bool master_equation_ok = false;
    bool theorem4_ok = false;
    bool betti_sums_ok = false;
    bool corollary2_ok = false;
    IntMultiset deo;
    IntMultiset lhs_surplus;  // witnesses; populated only on failure
    IntMultiset rhs_surplus;
};

struct Pseudo3DBlock {
    long long frobenius_closed = 0;
    long long genus_closed = 0;
    std::vector<long long> syzygy_degrees;
    bool betti1_matches = false;
    bool symmetric_function_identities = false;
};

struct MedBlock {
    long long closed_frobenius = 0;
    Integer closed_genus = 0;
    std::vector<Integer> closed_betti;
    std::vector<long long> delta_h_closed;
    long long closed_type = 0;
    bool almost_symmetric_med = false;
    bool criterion_agrees = true;   // pairing criterion vs gap classification
    bool numerator_matches = false; // partial-polynomial assembly vs generic
    bool w51_ok = false;            // total Betti sum closed form
    std::optional<bool> theorem8_ok;
    std::optional<bool> corollary3_ok;
};

struct AnalysisReport {
    // core invariants
    std::vector<long long> generators;
    long long multiplicity = 0;
    int edim = 0;
    long long sigma_m = 0;
    long long frobenius = 0;
    long long conductor = 0;
    long long genus = 0;
    std::vector<long long> gaps;
    IntMultiset apery;
    std::vector<long long> pseudo_frobenius;
    long long type = 0;

    // gap decomposition and class flags
    std::vector<long long> delta_g;
    std::vector<long long> delta_h;
    long long gamma = 0;
    bool symmetric = false;
    bool pseudosymmetric = false;
    bool almost_symmetric = false;
    bool tr9_ok = false;
    bool theorem1_ok = false;
    bool duality_ok = false;  // duality identity; true iff almost symmetric
    std::optional<PairingBlock> pairing;
    std::optional<Pseudo3DBlock> pseudo3d;

    IntPolynomial q;
    std::optional<ResolutionBlock> resolution;
    std::optional<MasterBlock> master;
    std::optional<MedBlock> med;

    long long elapsed_ms = 0;

    Json to_json() const;
    static AnalysisReport from_json(const Json& j);
};

struct AnalysisOptions {
    bool skip_betti = false;
};

// ---- analysis

inline AnalysisReport analyze(const NumericalSemigroup& s,
                              const AnalysisOptions& options = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    AnalysisReport r;
    r.generators = s.generators();
    r.multiplicity = s.multiplicity();
    r.edim = s.edim();
    r.sigma_m = s.sigma();

    const GapProfile profile = s.gap_profile();
    r.frobenius = profile.frobenius;
    r.conductor = profile.conductor;
    r.genus = profile.genus;
    r.gaps = profile.gaps;
    r.apery = s.apery_set();
    r.pseudo_frobenius = profile.pseudo_frobenius;
    r.type = profile.type;

    const GapDecomposition decomposition = decompose_gaps(s, profile);
    r.delta_g = decomposition.delta_g;
    r.delta_h = decomposition.delta_h;
    r.gamma = decomposition.gamma;
    r.tr9_ok = static_cast<long long>(decomposition.delta_g.size()) ==
                   profile.conductor - profile.genus &&
               decomposition.gamma == 2 * profile.genus - profile.conductor;

    const SemigroupClass cls = classify(profile, decomposition);
    r.symmetric = cls.symmetric;
    r.pseudosymmetric = cls.pseudosymmetric;
    r.almost_symmetric = cls.almost_symmetric;

    r.q = s.numerator_q();
    r.theorem1_ok = check_theorem1(s, decomposition, r.q);
    r.duality_ok = check_duality(s, profile, r.q);

    if (cls.almost_symmetric) {
        PairingBlock pb;
        try {
            const PairingCheck pc = check_self_duality_pairing(profile);
            pb.ok = true;
            pb.fixed_point_present = pc.fixed_point_present;
            pb.parity_ok = pc.parity_ok;
        } catch (const PairingBroken& e) {
            pb.ok = false;
            pb.witness = e.what();
        }
        r.pairing = pb;
    }

    std::optional<GradedBettiTable> table;
    if (!options.skip_betti) {
        table = graded_betti(s);  // throws on K-polynomial mismatch
        ResolutionBlock rb;
        rb.betti_numbers = table->betti();
        rb.betti_degrees = table->tables;
        rb.kpolynomial_ok = true;

        IntMultiset sprime_shifted;
        for (long long x : profile.pseudo_frobenius) sprime_shifted.add(Integer(x) + r.sigma_m);
        rb.lemma1_ok = table->tables.back() == sprime_shifted;

        if (r.edim >= 2) {
            Integer alt = 0;
            for (int i = 0; i < r.edim; ++i) {
                const Integer b = rb.betti_numbers[static_cast<std::size_t>(i)];
                alt += i % 2 == 0 ? b : -b;
            }
            rb.bet2_ok = alt == 0;
        }

        Integer total = 0;
        for (const auto& b : rb.betti_numbers) total += b;
        rb.bet22_ok = total <= Integer(r.multiplicity) * pow2(r.edim - 1) - 2 * (r.edim - 1);

        rb.disjointness_ok = true;
        for (int i = 0; i < r.edim && rb.disjointness_ok; ++i)
            for (int j = i + 1; j < r.edim; ++j) {
                if ((j - i) % 2 == 0) continue;
                if (!table->tables[static_cast<std::size_t>(i)]
                         .meet(table->tables[static_cast<std::size_t>(j)])
                         .empty()) {
                    rb.disjointness_ok = false;
                    break;
                }
            }
        r.resolution = std::move(rb);
    }

    std::optional<MSide> ms;
    std::optional<XSide> xs;
    if (table && r.gamma >= 1 && r.edim >= 3) {
        ms = build_m_side(s, decomposition);
        xs = build_x_side(*table);
        MasterBlock mb;
        mb.ell = ms->ell;
        mb.wp = xs->wp;
        mb.delta = xs->wp - ms->ell;
        const MasterCheck mc = check_master_equation(*ms, *xs);
        mb.master_equation_ok = mc.equation_ok;
        mb.theorem4_ok = mc.theorem4_ok;
        mb.lhs_surplus = mc.lhs_surplus;
        mb.rhs_surplus = mc.rhs_surplus;
        try {
            mb.betti_sums_ok = check_betti_sums(table->betti(), r.gamma, mb.delta,
                                                r.edim, cls.pseudosymmetric, xs->wp);
        } catch (const ParityViolation&) {
            mb.betti_sums_ok = false;
        }
        mb.corollary2_ok = check_corollary2(mb.delta, r.multiplicity, r.gamma, r.edim);
        mb.deo = d_eo(s);
        r.master = std::move(mb);

        if (r.edim == 3 && cls.pseudosymmetric) {
            const Pseudo3DReport p3 = pseudo3d_closed_form(
                s, profile, cls, table->tables[1]);
            Pseudo3DBlock pb;
            pb.frobenius_closed = p3.frobenius_closed;
            pb.genus_closed = p3.genus_closed;
            pb.syzygy_degrees = p3.syzygy_degrees;
            pb.betti1_matches = p3.betti1_matches;
            pb.symmetric_function_identities = p3.symmetric_function_identities;
            r.pseudo3d = pb;
        }
    }

    if (is_med(s)) {
        const MedReport mr = med_invariants(s, table ? &*table : nullptr);
        MedBlock mb;
        mb.closed_frobenius = mr.closed_frobenius;
        mb.closed_genus = mr.closed_genus;
        mb.closed_betti = mr.closed_betti;
        mb.delta_h_closed = mr.delta_h_closed;
        mb.closed_type = mr.closed_type;
        mb.almost_symmetric_med = mr.almost_symmetric_med;
        mb.criterion_agrees = mr.almost_symmetric_med == cls.almost_symmetric;
        mb.numerator_matches = med_numerator(s) == r.q;
        Integer total = 0;
        for (const auto& b : mr.closed_betti) total += b;
        mb.w51_ok = total == Integer(r.edim - 2) * pow2(r.edim - 1) + 2;
        if (mr.almost_symmetric_med && r.master && ms && xs && table)
            mb.theorem8_ok = r.master->delta == 0 && theorem8_check(s, *ms, *xs, *table);
        if (mr.almost_symmetric_med && r.edim % 2 == 1)
            mb.corollary3_ok = corollary3_check(s);
        r.med = std::move(mb);
    }

    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    return r;
}

// ---- verification (one named line per identity)

enum class CheckStatus { pass, fail, skipped };

struct CheckLine {
    std::string name;
    CheckStatus status = CheckStatus::skipped;
    std::string detail;
    bool gating = true;  // informational lines never change the exit code
};

struct VerifyResult {
    std::vector<CheckLine> lines;
    AnalysisReport report;
    bool all_ok = true;

    void add(const std::string& name, CheckStatus st, const std::string& detail = "") {
        lines.push_back({name, st, detail, true});
        if (st == CheckStatus::fail) all_ok = false;
    }
    void add(const std::string& name, bool ok, const std::string& detail = "") {
        add(name, ok ? CheckStatus::pass : CheckStatus::fail, detail);
    }
    void add_info(const std::string& name, bool ok, const std::string& detail = "") {
        lines.push_back({name, ok ? CheckStatus::pass : CheckStatus::fail, detail, false});
    }
};

inline VerifyResult verify(const NumericalSemigroup& s) {
    VerifyResult out;
    out.report = analyze(s, {});
    const AnalysisReport& r = out.report;

    out.add("tr9_cardinalities", r.tr9_ok);
    out.add("theorem1", r.theorem1_ok);
    out.add("kpolynomial", r.resolution->kpolynomial_ok);
    out.add("lemma1", r.resolution->lemma1_ok);
    if (r.resolution->bet2_ok)
        out.add("betti_alternating_sum", *r.resolution->bet2_ok);
    else
        out.add("betti_alternating_sum", CheckStatus::skipped, "edim 1");
    out.add("betti_bound", r.resolution->bet22_ok);
    // Adjacent-index degree collisions do occur in true graded Betti tables
    // (first instance: generators 6..11, degree 22), so this line is
    // informational and never fails the run.
    out.add_info("betti_disjointness", r.resolution->disjointness_ok,
                 r.resolution->disjointness_ok ? "" : "odd-distance collision");

    const std::string na = r.almost_symmetric ? "" : "not almost symmetric";
    if (r.almost_symmetric) {
        out.add("duality", r.duality_ok);
        out.add("pairing", r.pairing->ok && r.pairing->parity_ok, r.pairing->witness);
    } else {
        out.add("duality", CheckStatus::skipped, na);
        out.add("pairing", CheckStatus::skipped, na);
    }

    if (r.almost_symmetric && r.master) {
        std::string witness;
        if (!r.master->master_equation_ok)
            witness = "surplus " + r.master->lhs_surplus.to_string() + " vs " +
                      r.master->rhs_surplus.to_string();
        out.add("master_equation", r.master->master_equation_ok, witness);
        out.add("theorem4", r.master->theorem4_ok);
        out.add("betti_sums", r.master->betti_sums_ok);
        out.add("corollary2", r.master->corollary2_ok);
    } else {
        const std::string why = r.almost_symmetric ? "symmetric input" : na;
        out.add("master_equation", CheckStatus::skipped, why);
        out.add("theorem4", CheckStatus::skipped, why);
        out.add("betti_sums", CheckStatus::skipped, why);
        out.add("corollary2", CheckStatus::skipped, why);
    }

    if (r.med) {
        bool med_ok = r.med->criterion_agrees && r.med->numerator_matches &&
                      r.med->w51_ok;
        std::string detail;
        if (r.med->theorem8_ok) {
            med_ok = med_ok && *r.med->theorem8_ok;
            detail = *r.med->theorem8_ok ? "" : "theorem8";
        }
        if (r.med->corollary3_ok) {
            med_ok = med_ok && *r.med->corollary3_ok;
            if (!*r.med->corollary3_ok) detail += " corollary3";
        }
        out.add("med_criterion", med_ok, detail);
    } else {
        out.add("med_criterion", CheckStatus::skipped, "not maximal edim");
    }

    if (r.pseudo3d)
        out.add("pseudo3d_closed_form",
                r.pseudo3d->betti1_matches && r.pseudo3d->symmetric_function_identities);
    return out;
}

// ---- JSON serialization

inline Json AnalysisReport::to_json() const {
    Json core;
    core["generators"] = generators;
    core["multiplicity"] = multiplicity;
    core["edim"] = edim;
    core["sigma_m"] = sigma_m;
    core["frobenius"] = frobenius;
    core["conductor"] = conductor;
    core["genus"] = genus;
    core["gaps"] = gaps;
    core["apery"] = nsg::to_json(apery);
    core["pseudo_frobenius"] = pseudo_frobenius;
    core["type"] = type;

    Json cl;
    cl["delta_g"] = delta_g;
    cl["delta_h"] = delta_h;
    cl["gamma"] = gamma;
    cl["symmetric"] = symmetric;
    cl["pseudosymmetric"] = pseudosymmetric;
    cl["almost_symmetric"] = almost_symmetric;
    cl["tr9_ok"] = tr9_ok;
    cl["theorem1_ok"] = theorem1_ok;
    cl["duality_ok"] = duality_ok;
    if (pairing) {
        Json pj;
        pj["ok"] = pairing->ok;
        pj["fixed_point_present"] = pairing->fixed_point_present;
        pj["parity_ok"] = pairing->parity_ok;
        pj["witness"] = pairing->witness;
        cl["pairing"] = pj;
    } else {
        cl["pairing"] = nullptr;
    }
    if (pseudo3d) {
        Json pj;
        pj["frobenius_closed"] = pseudo3d->frobenius_closed;
        pj["genus_closed"] = pseudo3d->genus_closed;
        pj["syzygy_degrees"] = pseudo3d->syzygy_degrees;
        pj["betti1_matches"] = pseudo3d->betti1_matches;
        pj["symmetric_function_identities"] = pseudo3d->symmetric_function_identities;
        cl["pseudo3d"] = pj;
    } else {
        cl["pseudo3d"] = nullptr;
    }

    Json j;
    j["core"] = core;
    j["classification"] = cl;
    j["q"] = {{"pairs", nsg::to_json(q)}, {"rendered", q.to_string()}};

    if (resolution) {
        Json rj;
        rj["betti_numbers"] = Json::array();
        for (const auto& b : resolution->betti_numbers)
            rj["betti_numbers"].push_back(nsg::to_json(b));
        rj["betti_degrees"] = Json::array();
        for (const auto& t : resolution->betti_degrees)
            rj["betti_degrees"].push_back(nsg::to_json(t));
        rj["kpolynomial_ok"] = resolution->kpolynomial_ok;
        rj["lemma1_ok"] = resolution->lemma1_ok;
        rj["bet2_ok"] = resolution->bet2_ok ? Json(*resolution->bet2_ok) : Json(nullptr);
        rj["bet22_ok"] = resolution->bet22_ok;
        rj["disjointness_ok"] = resolution->disjointness_ok;
        j["resolution"] = rj;
    } else {
        j["resolution"] = nullptr;
    }

    if (master) {
        Json mj;
        mj["ell"] = nsg::to_json(master->ell);
        mj["wp"] = nsg::to_json(master->wp);
        mj["delta"] = nsg::to_json(master->delta);
        mj["master_equation_ok"] = master->master_equation_ok;
        mj["theorem4_ok"] = master->theorem4_ok;
        mj["betti_sums_ok"] = master->betti_sums_ok;
        mj["corollary2_ok"] = master->corollary2_ok;
        mj["d_eo"] = nsg::to_json(master->deo);
        mj["lhs_surplus"] = nsg::to_json(master->lhs_surplus);
        mj["rhs_surplus"] = nsg::to_json(master->rhs_surplus);
        j["master_equation"] = mj;
    } else {
        j["master_equation"] = nullptr;
    }

    if (med) {
        Json mj;
        mj["closed_frobenius"] = med->closed_frobenius;
        mj["closed_genus"] = nsg::to_json(med->closed_genus);
        mj["closed_betti"] = Json::array();
        for (const auto& b : med->closed_betti) mj["closed_betti"].push_back(nsg::to_json(b));
        mj["delta_h_closed"] = med->delta_h_closed;
        mj["closed_type"] = med->closed_type;
        mj["almost_symmetric_med"] = med->almost_symmetric_med;
        mj["criterion_agrees"] = med->criterion_agrees;
        mj["numerator_matches"] = med->numerator_matches;
        mj["w51_ok"] = med->w51_ok;
        mj["theorem8_ok"] = med->theorem8_ok ? Json(*med->theorem8_ok) : Json(nullptr);
        mj["corollary3_ok"] =
            med->corollary3_ok ? Json(*med->corollary3_ok) : Json(nullptr);
        j["med"] = mj;
    } else {
        j["med"] = nullptr;
    }

    j["elapsed_ms"] = elapsed_ms;
    return j;
}

inline AnalysisReport AnalysisReport::from_json(const Json& j) {
    AnalysisReport r;
    const Json& core = j.at("core");
    r.generators = core.at("generators").get<std::vector<long long>>();
    r.multiplicity = core.at("multiplicity").get<long long>();
    r.edim = core.at("edim").get<int>();
    r.sigma_m = core.at("sigma_m").get<long long>();
    r.frobenius = core.at("frobenius").get<long long>();
    r.conductor = core.at("conductor").get<long long>();
    r.genus = core.at("genus").get<long long>();
    r.gaps = core.at("gaps").get<std::vector<long long>>();
    r.apery = multiset_from_json(core.at("apery"));
    r.pseudo_frobenius = core.at("pseudo_frobenius").get<std::vector<long long>>();
    r.type = core.at("type").get<long long>();

    const Json& cl = j.at("classification");
    r.delta_g = cl.at("delta_g").get<std::vector<long long>>();
    r.delta_h = cl.at("delta_h").get<std::vector<long long>>();
    r.gamma = cl.at("gamma").get<long long>();
    r.symmetric = cl.at("symmetric").get<bool>();
    r.pseudosymmetric = cl.at("pseudosymmetric").get<bool>();
    r.almost_symmetric = cl.at("almost_symmetric").get<bool>();
    r.tr9_ok = cl.at("tr9_ok").get<bool>();
    r.theorem1_ok = cl.at("theorem1_ok").get<bool>();
    r.duality_ok = cl.at("duality_ok").get<bool>();
    if (!cl.at("pairing").is_null()) {
        PairingBlock pb;
        pb.ok = cl.at("pairing").at("ok").get<bool>();
        pb.fixed_point_present = cl.at("pairing").at("fixed_point_present").get<bool>();
        pb.parity_ok = cl.at("pairing").at("parity_ok").get<bool>();
        pb.witness = cl.at("pairing").at("witness").get<std::string>();
        r.pairing = pb;
    }
    if (!cl.at("pseudo3d").is_null()) {
        Pseudo3DBlock pb;
        const Json& pj = cl.at("pseudo3d");
        pb.frobenius_closed = pj.at("frobenius_closed").get<long long>();
        pb.genus_closed = pj.at("genus_closed").get<long long>();
        pb.syzygy_degrees = pj.at("syzygy_degrees").get<std::vector<long long>>();
        pb.betti1_matches = pj.at("betti1_matches").get<bool>();
        pb.symmetric_function_identities =
            pj.at("symmetric_function_identities").get<bool>();
        r.pseudo3d = pb;
    }

    r.q = polynomial_from_json(j.at("q").at("pairs"));

    if (!j.at("resolution").is_null()) {
        const Json& rj = j.at("resolution");
        ResolutionBlock rb;
        for (const auto& b : rj.at("betti_numbers"))
            rb.betti_numbers.push_back(integer_from_json(b));
        for (const auto& t : rj.at("betti_degrees"))
            rb.betti_degrees.push_back(multiset_from_json(t));
        rb.kpolynomial_ok = rj.at("kpolynomial_ok").get<bool>();
        rb.lemma1_ok = rj.at("lemma1_ok").get<bool>();
        if (!rj.at("bet2_ok").is_null()) rb.bet2_ok = rj.at("bet2_ok").get<bool>();
        rb.bet22_ok = rj.at("bet22_ok").get<bool>();
        rb.disjointness_ok = rj.at("disjointness_ok").get<bool>();
        r.resolution = std::move(rb);
    }

    if (!j.at("master_equation").is_null()) {
        const Json& mj = j.at("master_equation");
        MasterBlock mb;
        mb.ell = integer_from_json(mj.at("ell"));
        mb.wp = integer_from_json(mj.at("wp"));
        mb.delta = integer_from_json(mj.at("delta"));
        mb.master_equation_ok = mj.at("master_equation_ok").get<bool>();
        mb.theorem4_ok = mj.at("theorem4_ok").get<bool>();
        mb.betti_sums_ok = mj.at("betti_sums_ok").get<bool>();
        mb.corollary2_ok = mj.at("corollary2_ok").get<bool>();
        mb.deo = multiset_from_json(mj.at("d_eo"));
        mb.lhs_surplus = multiset_from_json(mj.at("lhs_surplus"));
        mb.rhs_surplus = multiset_from_json(mj.at("rhs_surplus"));
        r.master = std::move(mb);
    }

    if (!j.at("med").is_null()) {
        const Json& mj = j.at("med");
        MedBlock mb;
        mb.closed_frobenius = mj.at("closed_frobenius").get<long long>();
        mb.closed_genus = integer_from_json(mj.at("closed_genus"));
        for (const auto& b : mj.at("closed_betti"))
            mb.closed_betti.push_back(integer_from_json(b));
        mb.delta_h_closed = mj.at("delta_h_closed").get<std::vector<long long>>();
        mb.closed_type = mj.at("closed_type").get<long long>();
        mb.almost_symmetric_med = mj.at("almost_symmetric_med").get<bool>();
        mb.criterion_agrees = mj.at("criterion_agrees").get<bool>();
        mb.numerator_matches = mj.at("numerator_matches").get<bool>();
        mb.w51_ok = mj.at("w51_ok").get<bool>();
        if (!mj.at("theorem8_ok").is_null())
            mb.theorem8_ok = mj.at("theorem8_ok").get<bool>();
        if (!mj.at("corollary3_ok").is_null())
            mb.corollary3_ok = mj.at("corollary3_ok").get<bool>();
        r.med = std::move(mb);
    }

    r.elapsed_ms = j.at("elapsed_ms").get<long long>();
    return r;
}

}  // namespace nsg

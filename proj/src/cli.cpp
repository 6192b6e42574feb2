#include "quintic/cli.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

#include "quintic/hypergeom.hpp"
#include "quintic/instanton.hpp"
#include "quintic/mirror.hpp"
#include "quintic/recursion.hpp"
#include "quintic/schubert.hpp"
#include "quintic/sigma_model.hpp"

namespace quintic::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Report {
    Json params = Json::object();
    Json results = Json::array();
    bool pass = true;
};

int defaulted(int requested, int fallback) { return requested < 0 ? fallback : requested; }

WeightSpec weights_or(const RunConfig& cfg, WeightSpec fallback) {
    return cfg.lambdas ? *cfg.lambdas : std::move(fallback);
}

void cmd_instantons(const RunConfig& cfg, Report& rep) {
    const int maxd = defaulted(cfg.q_order, 10);
    rep.params["max_degree"] = maxd;
    InstantonTable table = instanton_table(maxd);
    for (const InstantonRow& row : table.rows) {
        Json r;
        r["d"] = row.d;
        r["N_d"] = row.gw.to_string();
        r["n_d"] = row.count.to_string();
        rep.results.push_back(std::move(r));
    }
}

void cmd_mirror_map(const RunConfig& cfg, Report& rep) {
    const int order = defaulted(cfg.q_order, 10);
    rep.params["order"] = order;
    MirrorMap m = build_mirror_map(order);
    for (int d = 0; d <= order; ++d) {
        Json r;
        r["d"] = d;
        r["f0"] = m.f0.coeff_q(d).to_string();
        r["g"] = m.g.coeff_q(d).to_string();
        rep.results.push_back(std::move(r));
    }
}

void cmd_yukawa(const RunConfig& cfg, Report& rep) {
    const int order = defaulted(cfg.q_order, 10);
    rep.params["order"] = order;
    TruncSeries<Rational> k =
        yukawa(apply_mirror(i_series(order), build_mirror_map(order)), order);
    for (int d = 0; d <= order; ++d) {
        Json r;
        r["d"] = d;
        r["k"] = k.coeff_q(d).to_string();
        rep.results.push_back(std::move(r));
    }
}

void cmd_verify_ode(const RunConfig& cfg, Report& rep) {
    const int order = defaulted(cfg.q_order, 10);
    rep.params["order"] = order;
    OdeReport ode = verify_ode(i_series(order), order);
    for (const OdeCheck& c : ode.checks) {
        Json r;
        r["degree"] = c.degree;
        r["pass"] = c.pass;
        if (!c.detail.empty()) r["detail"] = c.detail;
        rep.results.push_back(std::move(r));
    }
    rep.pass = ode.pass;
}

void cmd_verify_sigma_model(const RunConfig& cfg, Report& rep) {
    const int qo = defaulted(cfg.q_order, 5);
    const int zo = defaulted(cfg.z_order, 3);
    rep.params["max_degree"] = qo;
    rep.params["z_order"] = zo;
    SigmaModelReport sm = verify_theorem_a(qo, zo);
    Json summary;
    summary["coefficients_checked"] = (qo + 1) * (zo + 1);
    summary["mismatch_count"] = static_cast<int>(sm.mismatches.size());
    rep.results.push_back(std::move(summary));
    for (const SigmaModelMismatch& m : sm.mismatches) {
        Json r;
        r["q_degree"] = m.q_degree;
        r["z_degree"] = m.z_degree;
        r["residue_path"] = m.dh_value.to_string();
        r["pairing_path"] = m.pairing_value.to_string();
        rep.results.push_back(std::move(r));
    }
    rep.pass = sm.pass;
}

void cmd_verify_polynomiality(const RunConfig& cfg, Report& rep) {
    const int qo = defaulted(cfg.q_order, 3);
    const int zo = defaulted(cfg.z_order, 3);
    const WeightSpec w = weights_or(cfg, WeightSpec::standard());
    rep.params["q_order"] = qo;
    rep.params["z_order"] = zo;
    rep.params["lambdas"] = w.to_string();
    PolynomialityReport pol = verify_polynomiality(i_series_equivariant(qo, w), w, qo, zo);
    Json summary;
    summary["coefficients_checked"] = (qo + 1) * (zo + 1);
    summary["violation_count"] = static_cast<int>(pol.violations.size());
    rep.results.push_back(std::move(summary));
    for (const PolynomialityViolation& v : pol.violations) {
        Json r;
        r["q_degree"] = v.q_degree;
        r["z_degree"] = v.z_degree;
        r["non_polynomial_part"] = v.non_polynomial_part.to_string();
        rep.results.push_back(std::move(r));
    }
    rep.pass = pol.pass;
}

void cmd_verify_recursion(const RunConfig& cfg, Report& rep) {
    const int d_max = defaulted(cfg.q_order, 3);
    const WeightSpec w = weights_or(cfg, WeightSpec::generic_default());
    rep.params["q_order"] = d_max;
    rep.params["lambdas"] = w.to_string();
    GenericityCertificate cert = validate_weights(w, d_max);
    for (const std::string& line : cert.checks) {
        Json r;
        r["check"] = "genericity";
        r["pass"] = true;
        r["detail"] = line;
        rep.results.push_back(std::move(r));
    }
    LocalizedSeries z = i_series_equivariant(d_max, w);
    RecursionData data = extract_recursion(z, w, d_max);
    LocalizedSeries rebuilt = reconstruct(data, d_max);
    bool all = true;
    for (int d = 0; d <= d_max; ++d) {
        bool match = true;
        for (int a = 0; a < kFixedPoints; ++a)
            if (z.z_alpha[static_cast<size_t>(a)].coeff_q(d) !=
                rebuilt.z_alpha[static_cast<size_t>(a)].coeff_q(d))
                match = false;
        Json r;
        r["check"] = "round_trip";
        r["degree"] = d;
        r["pass"] = match;
        rep.results.push_back(std::move(r));
        all = all && match;
    }
    Json count;
    count["check"] = "coupling_constants";
    count["pass"] = true;
    count["detail"] = std::to_string(data.c.size()) + " residues extracted";
    rep.results.push_back(std::move(count));
    rep.pass = all;
}

void cmd_reconstruct(const RunConfig& cfg, Report& rep) {
    const int d_max = defaulted(cfg.q_order, 3);
    const int zo = defaulted(cfg.z_order, 9);
    const WeightSpec w = weights_or(cfg, WeightSpec::generic_default());
    rep.params["q_order"] = d_max;
    rep.params["z_order"] = zo;
    rep.params["lambdas"] = w.to_string();
    validate_weights(w, d_max);
    LocalizedSeries z = i_series_equivariant(d_max, w);
    LocalizedSeries t = mirror_transform_localized(z, build_mirror_map(d_max), w);
    RecursionData data = extract_recursion(t, w, d_max);
    AnchorData anchors = anchors_from(t, d_max);
    SolveUniqueResult res = solve_unique(data, anchors, d_max, zo);
    bool all = true;
    for (int d = 1; d <= d_max; ++d) {
        bool match = true;
        for (int a = 0; a < kFixedPoints; ++a)
            if (t.z_alpha[static_cast<size_t>(a)].coeff_q(d) !=
                res.z.z_alpha[static_cast<size_t>(a)].coeff_q(d))
                match = false;
        std::string free;
        for (const auto& [a, j] : res.pre_anchor_free[static_cast<size_t>(d - 1)]) {
            if (!free.empty()) free += " ";
            free += "(" + std::to_string(a) + "," + std::to_string(j) + ")";
        }
        Json r;
        r["degree"] = d;
        r["pre_anchor_nullity"] = res.pre_anchor_nullity[static_cast<size_t>(d - 1)];
        r["free_positions"] = free;
        r["match"] = match;
        rep.results.push_back(std::move(r));
        all = all && match;
    }
    rep.pass = all;
}

void cmd_oracle_lines(Report& rep) {
    struct Entry {
        const char* quantity;
        std::int64_t value;
        std::int64_t expected;
    };
    const Entry entries[] = {
        {"lines_on_quintic_threefold", count_lines_on_quintic(), 2875},
        {"lines_on_cubic_surface", count_lines_on_cubic_surface(), 27},
        {"plucker_degree_g25", plucker_degree_g25(), 5},
    };
    for (const Entry& e : entries) {
        Json r;
        r["quantity"] = e.quantity;
        r["value"] = std::to_string(e.value);
        r["expected"] = std::to_string(e.expected);
        r["pass"] = e.value == e.expected;
        rep.results.push_back(std::move(r));
        rep.pass = rep.pass && e.value == e.expected;
    }
}

void dispatch(const RunConfig& cfg, Report& rep) {
    switch (cfg.command) {
        case Command::instantons: cmd_instantons(cfg, rep); return;
        case Command::mirror_map: cmd_mirror_map(cfg, rep); return;
        case Command::yukawa: cmd_yukawa(cfg, rep); return;
        case Command::verify_ode: cmd_verify_ode(cfg, rep); return;
        case Command::verify_sigma_model: cmd_verify_sigma_model(cfg, rep); return;
        case Command::verify_polynomiality: cmd_verify_polynomiality(cfg, rep); return;
        case Command::verify_recursion: cmd_verify_recursion(cfg, rep); return;
        case Command::reconstruct: cmd_reconstruct(cfg, rep); return;
        case Command::oracle_lines: cmd_oracle_lines(rep); return;
    }
    throw StructureError("unknown command");
}

void record_error(Report& rep, const char* type, const std::string& message) {
    Json r;
    r["error"] = type;
    r["message"] = message;
    rep.results.push_back(std::move(r));
    rep.pass = false;
}

std::string csv_field(const Json& v) {
    std::string s;
    if (v.is_string())
        s = v.get<std::string>();
    else if (v.is_boolean())
        s = v.get<bool>() ? "true" : "false";
    else
        s = v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

std::string render_csv(const Report& rep) {
    std::vector<std::string> cols;
    for (const Json& row : rep.results)
        for (auto it = row.begin(); it != row.end(); ++it)
            if (std::find(cols.begin(), cols.end(), it.key()) == cols.end())
                cols.push_back(it.key());
    std::string out;
    for (size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
    out += "\n";
    for (const Json& row : rep.results) {
        for (size_t i = 0; i < cols.size(); ++i) {
            if (i) out += ",";
            if (row.contains(cols[i])) out += csv_field(row.at(cols[i]));
        }
        out += "\n";
    }
    return out;
}

std::string render_pretty(const std::string& name, const Report& rep, long long ms) {
    std::string out = "command: " + name + "\n";
    std::string params;
    for (auto it = rep.params.begin(); it != rep.params.end(); ++it) {
        if (!params.empty()) params += "  ";
        params += it.key() + "=" + (it->is_string() ? it->get<std::string>() : it->dump());
    }
    if (!params.empty()) out += "params: " + params + "\n";
    for (const Json& row : rep.results) {
        std::string line;
        for (auto it = row.begin(); it != row.end(); ++it) {
            std::string v = it->is_string() ? it->get<std::string>() : it->dump();
            if (v.empty()) continue;
            if (!line.empty()) line += "  ";
            line += it.key() + "=" + v;
        }
        out += "  " + line + "\n";
    }
    out += std::string("pass: ") + (rep.pass ? "true" : "false") + "\n";
    out += "elapsed_ms: " + std::to_string(ms) + "\n";
    return out;
}

std::string render_json(const std::string& name, const Report& rep, long long ms) {
    Json doc;
    doc["command"] = name;
    doc["params"] = rep.params;
    doc["results"] = rep.results;
    doc["pass"] = rep.pass;
    doc["elapsed_ms"] = ms;
    return doc.dump(2) + "\n";
}

}  // namespace

std::string command_name(Command c) {
    switch (c) {
        case Command::instantons: return "instantons";
        case Command::mirror_map: return "mirror-map";
        case Command::yukawa: return "yukawa";
        case Command::verify_ode: return "verify-ode";
        case Command::verify_sigma_model: return "verify-sigma-model";
        case Command::verify_polynomiality: return "verify-polynomiality";
        case Command::verify_recursion: return "verify-recursion";
        case Command::reconstruct: return "reconstruct";
        case Command::oracle_lines: return "oracle-lines";
    }
    return "unknown";
}

RunResult run(const RunConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    int exit_code = 0;
    try {
        dispatch(cfg, rep);
        exit_code = rep.pass ? 0 : 1;
    } catch (const DegenerateWeightsError& e) {
        record_error(rep, "degenerate-weights", e.what());
        exit_code = 2;
    } catch (const TheoremViolationError& e) {
        record_error(rep, "theorem-violation", e.what());
        exit_code = 1;
    } catch (const IntegralityError& e) {
        record_error(rep, "integrality", e.what());
        exit_code = 1;
    } catch (const InsufficientZOrderError& e) {
        record_error(rep, "insufficient-z-order", e.what());
        exit_code = 1;
    } catch (const NoPolynomialSolutionError& e) {
        record_error(rep, "no-polynomial-solution", e.what());
        exit_code = 1;
    } catch (const Error& e) {
        record_error(rep, "computation", e.what());
        exit_code = 1;
    }
    const auto t1 = std::chrono::steady_clock::now();
    const long long ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    const std::string name = command_name(cfg.command);
    RunResult out;
    out.exit_code = exit_code;
    switch (cfg.output) {
        case OutputFormat::pretty: out.text = render_pretty(name, rep, ms); break;
        case OutputFormat::json: out.text = render_json(name, rep, ms); break;
        case OutputFormat::csv: out.text = render_csv(rep); break;
    }
    return out;
}

}  // namespace quintic::cli

#include "qybe/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "qybe/errors.hpp"

namespace qybe::cli {

namespace {

Json defect_report(const ExactMatrix& defect) {
    Json j;
    j["zero"] = defect.is_zero();
    auto w = defect.first_nonzero();
    if (w) {
        j["witness"] = Json::array({w->first, w->second});
        j["witness_value"] = defect.at(w->first, w->second).to_string();
        Poly g = defect_constraint_gcd(defect);
        j["constraint_gcd"] = g.degree() > 0 ? Json(g.to_string()) : Json(nullptr);
    } else {
        j["witness"] = nullptr;
        j["witness_value"] = nullptr;
        j["constraint_gcd"] = nullptr;
    }
    return j;
}

}  // namespace

Json cmd_check_qybe(const std::string& quiver_path) {
    Quiver q = quiver_from_json(load_json_file(quiver_path));
    QybeReport rep = satisfies_qybe(q);
    Json j;
    j["command"] = "check-qybe";
    j["input"] = quiver_path;
    j.update(qybe_report_to_json(rep));
    return j;
}

Json cmd_classify(const std::string& quiver_path) {
    Quiver q = quiver_from_json(load_json_file(quiver_path));
    Json j;
    j["command"] = "classify";
    j["input"] = quiver_path;
    j.update(classification_to_json(classify(q)));
    return j;
}

Json cmd_kron_square(const std::string& quiver_path) {
    Quiver q = quiver_from_json(load_json_file(quiver_path));
    return quiver_to_json(kronecker_square(q));
}

Json cmd_census(const std::string& mode, std::size_t max_vertices) {
    CensusReport rep = census_check(max_vertices, mode_from_name(mode));
    Json j;
    j["command"] = "census";
    j.update(census_report_to_json(rep));
    return j;
}

std::vector<std::vector<long>> parse_components_spec(const std::string& spec) {
    std::vector<std::vector<long>> components;
    std::stringstream comps(spec);
    std::string comp;
    while (std::getline(comps, comp, ';')) {
        std::vector<long> sizes;
        std::stringstream items(comp);
        std::string item;
        while (std::getline(items, item, ',')) {
            try {
                sizes.push_back(std::stol(item));
            } catch (const std::exception&) {
                throw DomainError("bad automorphism-group size '" + item + "'");
            }
        }
        components.push_back(std::move(sizes));
    }
    return components;
}

Json cmd_groupoid(const std::string& components_spec) {
    auto components = parse_components_spec(components_spec);
    Quiver q = groupoid_quiver(components);
    Json j;
    j["command"] = "groupoid";
    j["quiver"] = quiver_to_json(q);
    // Per-component mu_i = sum of the automorphism-group sizes; the global mu
    // exists iff all sums agree.
    Json mus = Json::array();
    for (const auto& g : components) {
        long sum = 0;
        for (long x : g) sum += x;
        mus.push_back(std::to_string(sum));
    }
    j["component_mu"] = std::move(mus);
    MuResult global = tl_scalar(q.adjacency());
    j["global_mu"] = global.exists ? Json(global.mu.to_string()) : Json(nullptr);
    return j;
}

Json cmd_build_tl(const std::string& b_matrix_path) {
    ExactMatrix b = matrix_from_json(load_json_file(b_matrix_path));
    Json j;
    j["command"] = "build-tl";
    j.update(tl_generator_to_json(tl_from_b(b)));
    return j;
}

Json cmd_build_hecke(const std::string& tl_path) {
    TLGenerator x = tl_generator_from_json(load_json_file(tl_path));
    Json j;
    j["command"] = "build-hecke";
    j.update(hecke_candidate_to_json(hecke_from_tl(x)));
    return j;
}

Json cmd_standard_r(std::size_t n) {
    Json j;
    j["command"] = "standard-r";
    j["n"] = n;
    j.update(hecke_candidate_to_json(standard_r(n)));
    return j;
}

Json cmd_projection_r(const std::string& p_matrix_path) {
    ExactMatrix p = matrix_from_json(load_json_file(p_matrix_path));
    Json j;
    j["command"] = "projection-r";
    j.update(hecke_candidate_to_json(projection_r(p)));
    return j;
}

Json cmd_verify(const std::string& r_matrix_path, std::size_t n, bool hecke,
                bool braid, const std::vector<std::string>& q0_samples) {
    ExactMatrix r = matrix_from_json(load_json_file(r_matrix_path));
    Json j;
    j["command"] = "verify";
    j["input"] = r_matrix_path;
    j["n"] = n;
    std::optional<ExactMatrix> hecke_res, braid_res;
    if (hecke) {
        HeckeDefect d = hecke_defect(r);
        hecke_res = d.product_form;
        j["hecke"] = defect_report(d.product_form);
    }
    if (braid) {
        braid_res = braid_defect_q(r, n);
        j["braid"] = defect_report(*braid_res);
    }
    // Numeric cross-check: residuals evaluated at sample points must agree
    // with the symbolic verdicts.
    Json samples = Json::array();
    for (const auto& text : q0_samples) {
        Rational q0 = parse_scalar(text).as_rational();
        Json sj;
        sj["q0"] = qybe::to_string(q0);
        if (hecke_res) sj["hecke_zero"] = hecke_res->evaluate_at(q0).is_zero();
        if (braid_res) sj["braid_zero"] = braid_res->evaluate_at(q0).is_zero();
        samples.push_back(std::move(sj));
    }
    j["numeric"] = std::move(samples);
    return j;
}

Json cmd_rtt(const std::string& r_matrix_path, const std::string& layout_str,
             const std::vector<std::string>& gens) {
    ExactMatrix r = matrix_from_json(load_json_file(r_matrix_path));
    Layout layout = layout_from_name(layout_str);
    GeneratorSet generators;
    NCMatrix t;
    if (layout == Layout::Diag) {
        t = diagonal_generator_matrix(gens, generators);
    } else {
        auto k = gens.size();
        std::size_t n = 1;
        while (n * n < k) ++n;
        if (n * n != k)
            throw DomainError("full layout needs a square number of generators");
        std::vector<std::vector<std::string>> grid(n);
        for (std::size_t i = 0; i < n; ++i)
            grid[i].assign(gens.begin() + i * n, gens.begin() + (i + 1) * n);
        t = generator_matrix(grid, generators);
    }
    RelationSet rel = rtt_relations(r, t, generators, layout);
    Json j;
    j["command"] = "rtt";
    j["layout"] = layout_name(layout);
    j.update(relation_set_to_json(rel));
    j["text"] = relation_set_to_text(rel);
    return j;
}

Json cmd_frt(std::size_t n) {
    RelationSet rel = frt_relations(n);
    Json j;
    j["command"] = "frt";
    j["n"] = n;
    j.update(relation_set_to_json(rel));
    j["text"] = relation_set_to_text(rel);
    return j;
}

Json cmd_leavitt(const std::string& quiver_path,
                 const std::vector<std::string>& assignments) {
    Quiver q = quiver_from_json(load_json_file(quiver_path));
    std::map<std::string, RttAssignment> assigned;
    for (const auto& spec : assignments) {
        // vertex:matrix.json[:layout]
        auto c1 = spec.find(':');
        if (c1 == std::string::npos)
            throw DomainError("assignment must be vertex:rmatrix.json[:layout]");
        auto c2 = spec.find(':', c1 + 1);
        RttAssignment a;
        std::string path = c2 == std::string::npos
                               ? spec.substr(c1 + 1)
                               : spec.substr(c1 + 1, c2 - c1 - 1);
        a.r = matrix_from_json(load_json_file(path));
        a.layout = c2 == std::string::npos
                       ? Layout::Full
                       : layout_from_name(spec.substr(c2 + 1));
        assigned[spec.substr(0, c1)] = std::move(a);
    }
    Presentation p = leavitt_presentation(q, assigned);
    Json j;
    j["command"] = "leavitt";
    j.update(presentation_to_json(p));
    j["text"] = p.to_text();
    return j;
}

namespace {

void emit(const Json& report, const std::string& out_path,
          const std::string& text_key = "") {
    if (out_path.empty()) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    // Text-producing commands write plain text when the path ends in .txt.
    if (!text_key.empty() && out_path.size() > 4 &&
        out_path.compare(out_path.size() - 4, 4, ".txt") == 0) {
        write_text_file(out_path, report.at(text_key).get<std::string>());
        return;
    }
    write_json_file(out_path, report);
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Exact toolkit for quivers, the quantum Yang-Baxter equation, "
                 "Hecke R-matrices and RTT relation presentations"};
    app.require_subcommand(1);

    std::string input, out, mode = "simple", layout = "full", components;
    std::size_t n = 2, max_vertices = 4;
    bool hecke = false, braid = false;
    std::vector<std::string> gens, q0s, assignments;

    auto add_out = [&](CLI::App* c) { c->add_option("--out", out, "output path"); };

    auto* c_check = app.add_subcommand("check-qybe", "braid-form QYBE verdict for a quiver");
    c_check->add_option("quiver", input, "quiver JSON file")->required();
    add_out(c_check);

    auto* c_classify = app.add_subcommand("classify", "block structure of a symmetric quiver");
    c_classify->add_option("quiver", input)->required();
    add_out(c_classify);

    auto* c_kron = app.add_subcommand("kron-square", "Kronecker square quiver");
    c_kron->add_option("quiver", input)->required();
    add_out(c_kron);

    auto* c_census = app.add_subcommand("census", "exhaustive small-graph check of A^2 = mu A");
    c_census->add_option("--mode", mode, "simple|loops|multi")->required();
    c_census->add_option("--max", max_vertices, "max vertex count")->required();
    add_out(c_census);

    auto* c_groupoid = app.add_subcommand("groupoid", "quiver of a groupoid from |Aut| sizes");
    c_groupoid->add_option("--components", components, "e.g. \"1,2;3\"")->required();
    add_out(c_groupoid);

    auto* c_tl = app.add_subcommand("build-tl", "Temperley-Lieb generator from an invertible b");
    c_tl->add_option("--b", input, "matrix JSON for b")->required();
    add_out(c_tl);

    auto* c_hecke = app.add_subcommand("build-hecke", "Hecke candidate qI + X from a TL generator");
    c_hecke->add_option("--x", input, "TL generator JSON")->required();
    add_out(c_hecke);

    auto* c_std = app.add_subcommand("standard-r", "standard GL_q(n) R-matrix");
    c_std->add_option("--n", n)->required();
    add_out(c_std);

    auto* c_proj = app.add_subcommand("projection-r", "R = qP - q^-1(I-P) from an idempotent");
    c_proj->add_option("--p", input, "matrix JSON for P")->required();
    add_out(c_proj);

    auto* c_verify = app.add_subcommand("verify", "Hecke/braid residuals of an R-matrix");
    c_verify->add_option("rmatrix", input)->required();
    c_verify->add_option("--n", n)->required();
    c_verify->add_flag("--hecke", hecke);
    c_verify->add_flag("--braid", braid);
    c_verify->add_option("--q0", q0s, "rational sample point (repeatable)");
    add_out(c_verify);

    auto* c_rtt = app.add_subcommand("rtt", "RTT relation set of an R-matrix");
    c_rtt->add_option("--r", input, "R-matrix JSON")->required();
    c_rtt->add_option("--layout", layout, "full|diag");
    c_rtt->add_option("--gens", gens, "generator names")->required()->delimiter(',');
    add_out(c_rtt);

    auto* c_frt = app.add_subcommand("frt", "FRT relations of O_q(M_n)");
    c_frt->add_option("--n", n)->required();
    add_out(c_frt);

    auto* c_leavitt = app.add_subcommand("leavitt", "Leavitt path algebra presentation");
    c_leavitt->add_option("quiver", input)->required();
    c_leavitt->add_option("--assign", assignments,
                          "vertex:rmatrix.json[:layout] (repeatable)");
    add_out(c_leavitt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*c_check) emit(cmd_check_qybe(input), out);
        else if (*c_classify) emit(cmd_classify(input), out);
        else if (*c_kron) emit(cmd_kron_square(input), out);
        else if (*c_census) emit(cmd_census(mode, max_vertices), out);
        else if (*c_groupoid) emit(cmd_groupoid(components), out);
        else if (*c_tl) emit(cmd_build_tl(input), out);
        else if (*c_hecke) emit(cmd_build_hecke(input), out);
        else if (*c_std) emit(cmd_standard_r(n), out);
        else if (*c_proj) emit(cmd_projection_r(input), out);
        else if (*c_verify) {
            if (q0s.empty()) q0s = {"2", "3", "1/2"};
            if (!hecke && !braid) hecke = braid = true;
            emit(cmd_verify(input, n, hecke, braid, q0s), out);
        } else if (*c_rtt) emit(cmd_rtt(input, layout, gens), out, "text");
        else if (*c_frt) emit(cmd_frt(n), out, "text");
        else if (*c_leavitt) emit(cmd_leavitt(input, assignments), out, "text");
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace qybe::cli

// zinbiel: construct, verify and analyze the classified nilpotent Zinbiel
// algebras with two-block characteristic sequence.
//
// Exit codes: 0 success; 64 command-line parse error; 65 semantic error
// (bad parameters, schema violations); 70 internal error. `verify` exits 1
// when defects are found; `iso` exits 0 = yes, 1 = no, 2 = exhausted.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zinbiel/families.hpp"
#include "zinbiel/gradation.hpp"
#include "zinbiel/identities.hpp"
#include "zinbiel/io.hpp"
#include "zinbiel/isomorphism.hpp"
#include "zinbiel/spectra.hpp"

namespace {

using namespace zinbiel;

std::string partition_str(const std::vector<int>& part) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < part.size(); ++i)
        os << (i ? "," : "") << part[i];
    os << ")";
    return os.str();
}

std::optional<Scalar> parse_flag_scalar(const std::string& text, const std::string& flag) {
    if (text.empty())
        return std::nullopt;
    try {
        return Scalar::parse(text);
    } catch (const Error& e) {
        throw ParameterError(flag + ": " + e.what());
    }
}

int cmd_family(const std::string& name, int n, int p, int t, const std::string& beta1,
               const std::string& gamma1, const std::string& delta1, const std::string& delta_pm1,
               const std::string& out_path) {
    auto id = family_from_name(name);
    if (!id)
        throw ParameterError("unknown family name: " + name +
                             " (expected A1..A12, T1..T10, EX31, NF, W31)");
    FamilyParams params;
    if (n > 0)
        params.n = n;
    if (p > 0)
        params.p = p;
    if (t > 0)
        params.t = t;
    params.beta1 = parse_flag_scalar(beta1, "--beta1");
    params.gamma1 = parse_flag_scalar(gamma1, "--gamma1");
    params.delta1 = parse_flag_scalar(delta1, "--delta1");
    params.delta_pm1 = parse_flag_scalar(delta_pm1, "--delta-pm1");
    Algebra a = build_family(*id, params);
    if (out_path.empty()) {
        std::cout << algebra_to_json(a);
    } else {
        save_algebra(out_path, a);
        std::cout << family_name(*id) << ": dim " << a.dim << " written to " << out_path << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& path) {
    Algebra a = load_algebra(path);
    auto defects = zinbiel_defects(a);
    if (defects.empty()) {
        std::cout << "Zinbiel: OK (" << a.dim << "^3 = " << a.dim * a.dim * a.dim
                  << " triples checked)\n";
        return 0;
    }
    std::cout << "Zinbiel: FAILED, " << defects.size() << " nonzero defect(s)\n";
    std::size_t shown = 0;
    for (const auto& d : defects) {
        if (shown++ >= 10) {
            std::cout << "  ...\n";
            break;
        }
        std::cout << "  triple (" << d.i << "," << d.j << "," << d.k << "): ";
        for (const auto& term : d.value)
            std::cout << "+(" << term.c << ")*" << a.labels[static_cast<std::size_t>(term.k - 1)]
                      << " ";
        std::cout << "\n";
    }
    return 1;
}

int cmd_charseq(const std::string& path, int grid_height, int samples, std::uint64_t seed) {
    Algebra a = load_algebra(path);
    CharSeqStrategy strategy;
    strategy.grid_height = grid_height;
    strategy.samples = samples;
    strategy.seed = seed;
    CharSequence cs = char_sequence(a, strategy);
    std::cout << partition_str(cs.partition) << "\n";
    std::cout << "witness:";
    for (int i = 0; i < a.dim; ++i)
        if (!cs.witness[static_cast<std::size_t>(i)].is_zero())
            std::cout << " +(" << cs.witness[static_cast<std::size_t>(i)] << ")*"
                      << a.labels[static_cast<std::size_t>(i)];
    std::cout << "\n";
    if (cs.partition.size() == 2) {
        try {
            AlgebraType ty = detect_type(a, cs);
            std::cout << "type: " << (ty == AlgebraType::I ? "I" : "II") << "\n";
        } catch (const Error& e) {
            std::cout << "type: undetermined (" << e.what() << ")\n";
        }
    }
    return 0;
}

int cmd_grade(const std::string& path, const std::string& out_path) {
    Algebra a = load_algebra(path);
    GradedAlgebra g = natural_grading(a);
    std::cout << "component dims:";
    for (int d : g.component_dims)
        std::cout << " " << d;
    std::cout << "\n";
    std::string text = graded_to_json(g);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out)
            throw Error("cannot open " + out_path + " for writing");
        out << text;
        std::cout << "graded tensor written to " << out_path << "\n";
    }
    return 0;
}

int cmd_iso(const std::string& path_a, const std::string& path_b, int height) {
    Algebra a = load_algebra(path_a);
    Algebra b = load_algebra(path_b);
    IsoBounds bounds;
    bounds.height = height;
    IsoResult r = iso_search(a, b, bounds);
    switch (r.status) {
    case IsoResult::Status::Yes:
        std::cout << "yes: " << r.detail << "\n";
        return 0;
    case IsoResult::Status::No:
        std::cout << "no: " << r.detail << "\n";
        return 1;
    case IsoResult::Status::Exhausted:
    default:
        std::cout << "exhausted: " << r.detail << "\n";
        return 2;
    }
}

int cmd_deduce(const std::string& path, long budget) {
    PartialTable t = load_partial_table(path);
    PropagateResult r = propagate(t, budget);
    std::cout << "instances expanded: " << r.instances_expanded
              << (r.complete ? "" : " (budget exhausted, result incomplete)") << "\n";
    std::cout << "quadratic instances skipped: " << r.quadratic_skips << "\n";
    std::cout << "linear constraints: " << r.constraints.size() << "\n";
    if (r.contradiction) {
        std::cout << "contradiction: basis vector e" << r.contradiction->basis_index
                  << " forced to zero by the " << r.contradiction->identity << " identity at ("
                  << r.contradiction->ti << "," << r.contradiction->tj << ","
                  << r.contradiction->tk << ")\n";
    } else {
        std::cout << "no contradiction\n";
    }
    return 0;
}

int cmd_nonexist(int p, const std::string& json_path) {
    NonexistenceReport rep = nonexistence_certificate(p);
    bool checked = check_nonexistence_certificate(rep);
    std::cout << "nonexistence certificate, p = " << p << "\n";
    std::cout << "  det of the order-" << (p + 1) << " binomial matrix: " << rep.det << "\n";
    std::cout << "  rank of the first " << (p + 1) << " rows: " << rep.rank << " (unknowns beta_0..beta_"
              << p << ")\n";
    std::cout << "  with beta_0 = 1 pinned: " << (rep.infeasible ? "infeasible" : "feasible") << "\n";
    if (rep.infeasible) {
        std::cout << "  1 = 0 combination (row multipliers):";
        for (const auto& y : rep.farkas)
            std::cout << " " << y;
        std::cout << "\n  combination independently checked: " << (checked ? "yes" : "NO") << "\n";
    }
    std::cout << "  " << rep.statement << "\n";
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out)
            throw Error("cannot open " + json_path + " for writing");
        out << certificate_to_json(rep, checked);
        std::cout << "  JSON twin written to " << json_path << "\n";
    }
    return rep.infeasible && checked ? 0 : 1;
}

int cmd_identity_suite(long max_index) {
    bool ok = true;
    long checked = 0;
    for (long n = 1; n <= max_index; ++n)
        for (long a = 1; a <= max_index; ++a) {
            Rational s = lemma_alternating_sum(n, a);
            ++checked;
            if (!s.is_zero()) {
                std::cout << "alternating sum NONZERO at n=" << n << ", a=" << a << ": " << s << "\n";
                ok = false;
            }
        }
    std::cout << "alternating-sum identity: " << checked << " cases, "
              << (ok ? "all zero" : "FAILURES above") << "\n";
    for (int p = 2; p <= 8; ++p) {
        Rational d = det_rational(binomial_matrix(p));
        std::cout << "det binomial matrix p=" << p << ": " << d << "\n";
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tools for naturally graded nilpotent Zinbiel algebras"};
    app.require_subcommand(1);

    // family
    auto* family = app.add_subcommand("family", "build a family table and write it as JSON");
    std::string fam_name, fam_beta1, fam_gamma1, fam_delta1, fam_delta_pm1, fam_out;
    int fam_n = 0, fam_p = 0, fam_t = 0;
    family->add_option("--name", fam_name, "family id: A1..A12, T1..T10, EX31, NF, W31")->required();
    family->add_option("--n", fam_n, "dimension (where the family allows a choice)");
    family->add_option("--p", fam_p, "short block size p >= 3");
    family->add_option("--t", fam_t, "offset for T9/T10 (n = 2p+t)");
    family->add_option("--beta1", fam_beta1, "beta_1 value (rational)");
    family->add_option("--gamma1", fam_gamma1, "gamma_1 value (A7)");
    family->add_option("--delta1", fam_delta1, "delta_1 value (A7)");
    family->add_option("--delta-pm1", fam_delta_pm1, "delta_{p-1} value (A10)");
    family->add_option("--out", fam_out, "output path (stdout when omitted)");

    // verify
    auto* verify = app.add_subcommand("verify", "check the Zinbiel identity on all basis triples");
    std::string verify_path;
    verify->add_option("algebra", verify_path, "algebra JSON file")->required();

    // charseq
    auto* charseq = app.add_subcommand("charseq", "characteristic sequence by bounded search");
    std::string charseq_path;
    int grid_height = 3, samples = 0;
    std::uint64_t seed = 1;
    charseq->add_option("algebra", charseq_path, "algebra JSON file")->required();
    charseq->add_option("--grid-height", grid_height, "integer grid height on a complement of A^2");
    charseq->add_option("--samples", samples, "extra random rational samples");
    charseq->add_option("--seed", seed, "random seed");

    // grade
    auto* grade = app.add_subcommand("grade", "natural gradation: component dims and graded tensor");
    std::string grade_path, grade_out;
    grade->add_option("algebra", grade_path, "algebra JSON file")->required();
    grade->add_option("--out", grade_out, "output path for the graded JSON (stdout when omitted)");

    // iso
    auto* iso = app.add_subcommand("iso", "graded isomorphism search (exit 0 yes / 1 no / 2 exhausted)");
    std::string iso_a, iso_b;
    int iso_height = 6;
    iso->add_option("a", iso_a, "first algebra JSON file")->required();
    iso->add_option("b", iso_b, "second algebra JSON file")->required();
    iso->add_option("--height", iso_height, "rational grid height for free unknowns");

    // deduce
    auto* deduce = app.add_subcommand("deduce", "linear constraint propagation on a partial table");
    std::string deduce_path;
    long budget = 500;
    deduce->add_option("--table", deduce_path, "partial table JSON file")->required();
    deduce->add_option("--budget", budget, "maximum identity instances to expand");

    // nonexist
    auto* nonexist = app.add_subcommand("nonexist", "nonexistence certificate for n >= 3p+2");
    int nonexist_p = 3;
    std::string nonexist_json;
    nonexist->add_option("--p", nonexist_p, "short block size p >= 3")->required();
    nonexist->add_option("--json", nonexist_json, "also write the JSON twin here");

    // identity-suite
    auto* idsuite = app.add_subcommand("identity-suite", "run the combinatorial identity checks");
    long id_max = 12;
    idsuite->add_option("--max", id_max, "check the alternating sum for 1 <= n, a <= max");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    try {
        if (*family)
            return cmd_family(fam_name, fam_n, fam_p, fam_t, fam_beta1, fam_gamma1, fam_delta1,
                              fam_delta_pm1, fam_out);
        if (*verify)
            return cmd_verify(verify_path);
        if (*charseq)
            return cmd_charseq(charseq_path, grid_height, samples, seed);
        if (*grade)
            return cmd_grade(grade_path, grade_out);
        if (*iso)
            return cmd_iso(iso_a, iso_b, iso_height);
        if (*deduce)
            return cmd_deduce(deduce_path, budget);
        if (*nonexist)
            return cmd_nonexist(nonexist_p, nonexist_json);
        if (*idsuite)
            return cmd_identity_suite(id_max);
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 65;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 65;
    } catch (const UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 65;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 65;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return 70;
}

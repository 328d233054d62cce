// symstab: exact decompositions, canonical bases and stability reports for
// the natural symmetric-group modules on subsets, square-free polynomials
// and the degree <= 2 part of the braid arrangement cohomology.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "symstab/powerset.hpp"
#include "symstab/report.hpp"

namespace ss = symstab;
using ss::report::Json;

namespace {

struct OutputOptions {
    std::string format = "table";
    bool stable = false;
    std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    cmd->add_flag("--stable", opts.stable, "display stable notation");
    cmd->add_option("--out", opts.out_path, "write the report to a file instead of stdout");
}

void emit(const OutputOptions& opts, const Json& doc, const std::string& text) {
    std::string payload = opts.format == "json" ? doc.dump(2) + "\n" : text;
    if (opts.out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(opts.out_path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open output file " + opts.out_path);
        f << payload;
    }
}

ss::Partition parse_partition(const std::string& s) {
    std::vector<int> parts;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        parts.push_back(std::stoi(tok));
    }
    return parts.empty() ? ss::Partition() : ss::Partition(std::move(parts));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "symstab: exact symmetric-group decompositions, canonical bases and\n"
        "stability reports for subset modules, square-free polynomials and the\n"
        "quadratic braid-arrangement algebra.  All arithmetic is exact; output\n"
        "is deterministic.  Caps: full-group operations need n <= 8, character\n"
        "operations n <= 10, stability windows end at n <= 10 (rep) / 7 (action)."};
    app.require_subcommand(1);

    // ---- decompose ----------------------------------------------------
    auto* dec = app.add_subcommand("decompose", "irreducible decomposition of a module");
    std::string dec_what;
    int dec_n = 0, dec_k = 0, dec_degree = 2;
    OutputOptions dec_out;
    dec->add_option("what", dec_what, "powerset|powerset-full|squarefree|lambda2|yb-ideal|arnold")
        ->required()
        ->check(CLI::IsMember(
            {"powerset", "powerset-full", "squarefree", "lambda2", "yb-ideal", "arnold"}));
    dec->add_option("--n", dec_n, "degree n")->required();
    dec->add_option("--k", dec_k, "cardinality k (powerset/squarefree)");
    dec->add_option("--degree", dec_degree, "grading degree (arnold: 1 or 2)");
    add_output_flags(dec, dec_out);

    // ---- basis --------------------------------------------------------
    auto* bas = app.add_subcommand("basis", "explicit bases");
    std::string bas_what;
    int bas_n = 0, bas_k = 0, bas_i = 0;
    OutputOptions bas_out;
    bas->add_option("what", bas_what, "filtration|squarefree")
        ->required()
        ->check(CLI::IsMember({"filtration", "squarefree"}));
    bas->add_option("--n", bas_n, "degree n")->required();
    bas->add_option("--k", bas_k, "cardinality k")->required();
    bas->add_option("--i", bas_i, "filtration level i")->required();
    add_output_flags(bas, bas_out);

    // ---- character ----------------------------------------------------
    auto* chr = app.add_subcommand("character", "exact characters");
    std::string chr_what, chr_partition, chr_mu, chr_module;
    int chr_n = 0, chr_k = 0, chr_i = 0, chr_degree = 2;
    OutputOptions chr_out;
    chr->add_option("what", chr_what, "irr|closed-form|module")
        ->required()
        ->check(CLI::IsMember({"irr", "closed-form", "module"}));
    chr->add_option("--partition", chr_partition, "irreducible label, e.g. 3,1 (irr)");
    chr->add_option("--mu", chr_mu, "stable label tail, e.g. 2,1 (closed-form)");
    chr->add_option("--module", chr_module,
                    "powerset|powerset-full|squarefree|filtration|lambda2|yb-ideal|arnold");
    chr->add_option("--n", chr_n, "degree n");
    chr->add_option("--k", chr_k, "cardinality k");
    chr->add_option("--i", chr_i, "filtration level i");
    chr->add_option("--degree", chr_degree, "grading degree (arnold)");
    add_output_flags(chr, chr_out);

    // ---- stability ----------------------------------------------------
    auto* stab = app.add_subcommand("stability", "stability reports over an n-window");
    std::string stab_what, stab_family;
    int stab_k = 0, stab_i = 0, stab_nmin = 0, stab_nmax = 0;
    OutputOptions stab_out;
    stab->add_option("what", stab_what, "rep|action")
        ->required()
        ->check(CLI::IsMember({"rep", "action"}));
    stab->add_option("--family", stab_family,
                     "rep: powerset|powerset-full|squarefree|filtration; "
                     "action: subsets|powerset|natural|sign")
        ->required();
    stab->add_option("--k", stab_k, "cardinality k (where applicable)");
    stab->add_option("--i", stab_i, "filtration level i (filtration family)");
    stab->add_option("--n-min", stab_nmin, "window start")->required();
    stab->add_option("--n-max", stab_nmax, "window end")->required();
    add_output_flags(stab, stab_out);

    // ---- omega-bases ----------------------------------------------------
    auto* omg = app.add_subcommand("omega-bases", "explicit degree-1 bases of the "
                                                  "three stable components");
    int omg_n = 0;
    OutputOptions omg_out;
    omg->add_option("--n", omg_n, "degree n (>= 4)")->required();
    add_output_flags(omg, omg_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (dec->parsed()) {
            ss::chars::MultiplicityTable table;
            Json params;
            params["n"] = dec_n;
            std::string label;
            if (dec_what == "powerset" || dec_what == "squarefree") {
                if (!dec->count("--k")) throw std::invalid_argument("--k is required here");
                params["k"] = dec_k;
                table = ss::chars::decompose_character(ss::chars::subsets_character(dec_n, dec_k));
                label = (dec_what == "powerset" ? "LP_" : "Sf_") + std::to_string(dec_k) + "(" +
                        std::to_string(dec_n) + ")";
            } else if (dec_what == "powerset-full") {
                table = ss::chars::decompose_character(ss::chars::powerset_full_character(dec_n));
                label = "LP(" + std::to_string(dec_n) + ")";
            } else if (dec_what == "lambda2") {
                table = ss::arnold::lambda2_decompose(dec_n);
                label = "Lambda^2(" + std::to_string(dec_n) + ")";
            } else if (dec_what == "yb-ideal") {
                table = ss::arnold::i2_decompose(dec_n);
                label = "I^2(" + std::to_string(dec_n) + ")";
            } else {
                params["degree"] = dec_degree;
                table = ss::arnold::arnold_decompose(dec_n, dec_degree);
                label = "A^" + std::to_string(dec_degree) + "(" + std::to_string(dec_n) + ")";
            }
            Json doc = ss::report::envelope("decompose " + dec_what, params,
                                            ss::report::multiplicity_table_json(table));
            emit(dec_out, doc,
                 label + "\n" + ss::report::multiplicity_table_text(table, dec_out.stable));
        } else if (bas->parsed()) {
            Json params;
            params["n"] = bas_n;
            params["k"] = bas_k;
            params["i"] = bas_i;
            Json result;
            std::ostringstream text;
            if (bas_what == "filtration") {
                auto basis = ss::powerset::filtration_basis(bas_n, bas_k, bas_i);
                Json arr = Json::array();
                for (const auto& v : basis) arr.push_back(ss::report::subset_vector_json(v));
                result["basis"] = std::move(arr);
                result["count"] = basis.size();
                text << "filtration basis, level " << bas_i << " of the " << bas_k
                     << "-subset module at n=" << bas_n << " (" << basis.size() << " vectors)\n";
                for (const auto& v : basis) text << "  " << v.to_string() << '\n';
            } else {
                auto pairs = ss::squarefree::canonical_delta_set(bas_n, bas_i);
                auto basis = ss::squarefree::irreducible_basis(bas_n, bas_k, bas_i);
                Json arr = Json::array();
                for (std::size_t t = 0; t < basis.size(); ++t) {
                    Json e;
                    e["factored"] =
                        ss::report::factored_basis_string(pairs[t], bas_n, bas_k, bas_i);
                    e["terms"] = ss::report::subset_vector_json(basis[t]);
                    arr.push_back(std::move(e));
                }
                result["basis"] = std::move(arr);
                result["count"] = basis.size();
                text << "canonical basis of the two-row component at level " << bas_i
                     << " of the degree-" << bas_k << " square-free slice, n=" << bas_n << " ("
                     << basis.size() << " polynomials)\n";
                for (std::size_t t = 0; t < basis.size(); ++t)
                    text << "  "
                         << ss::report::factored_basis_string(pairs[t], bas_n, bas_k, bas_i)
                         << '\n';
            }
            emit(bas_out, ss::report::envelope("basis " + bas_what, params, result), text.str());
        } else if (chr->parsed()) {
            ss::chars::CharacterFn f;
            Json params;
            if (chr_what == "irr") {
                if (!chr->count("--partition"))
                    throw std::invalid_argument("--partition is required here");
                ss::Partition lam = parse_partition(chr_partition);
                params["partition"] = ss::report::partition_json(lam);
                f = ss::chars::irreducible_character(lam);
            } else if (chr_what == "closed-form") {
                if (!chr->count("--mu") || !chr->count("--n"))
                    throw std::invalid_argument("--mu and --n are required here");
                ss::Partition mu = parse_partition(chr_mu);
                params["mu"] = ss::report::partition_json(mu);
                params["n"] = chr_n;
                ss::StableLabel label(mu, chr_n);
                f.n = chr_n;
                for (const auto& cc : ss::conjugacy_classes(chr_n))
                    f.values[cc.type.to_partition()] =
                        ss::chars::closed_form_character(label, cc.type);
            } else {
                if (!chr->count("--module") || !chr->count("--n"))
                    throw std::invalid_argument("--module and --n are required here");
                params["module"] = chr_module;
                params["n"] = chr_n;
                if (chr_module == "powerset" || chr_module == "squarefree") {
                    params["k"] = chr_k;
                    f = ss::chars::subsets_character(chr_n, chr_k);
                } else if (chr_module == "powerset-full") {
                    f = ss::chars::powerset_full_character(chr_n);
                } else if (chr_module == "filtration") {
                    params["k"] = chr_k;
                    params["i"] = chr_i;
                    f = ss::chars::module_character(
                        ss::powerset::filtration_basis(chr_n, chr_k, chr_i), chr_n);
                } else if (chr_module == "lambda2") {
                    f = ss::chars::exterior_square_character(ss::arnold::degree1_character(chr_n));
                } else if (chr_module == "yb-ideal") {
                    f = ss::arnold::i2_character(chr_n);
                } else if (chr_module == "arnold") {
                    params["degree"] = chr_degree;
                    if (chr_degree == 1)
                        f = ss::arnold::degree1_character(chr_n);
                    else
                        f = ss::chars::exterior_square_character(
                                ss::arnold::degree1_character(chr_n)) -
                            ss::arnold::i2_character(chr_n);
                } else {
                    throw std::invalid_argument("unknown module " + chr_module);
                }
            }
            Json doc = ss::report::envelope("character " + chr_what, params,
                                            ss::report::character_json(f));
            emit(chr_out, doc, ss::report::character_text(f));
        } else if (stab->parsed()) {
            Json params;
            params["family"] = stab_family;
            params["n_min"] = stab_nmin;
            params["n_max"] = stab_nmax;
            if (stab_what == "rep") {
                ss::stability::ModuleFamily fam;
                if (stab_family == "powerset") {
                    params["k"] = stab_k;
                    fam = ss::stability::subsets_module_family(stab_k);
                } else if (stab_family == "powerset-full") {
                    fam = ss::stability::powerset_module_family();
                } else if (stab_family == "squarefree") {
                    params["k"] = stab_k;
                    fam = ss::stability::squarefree_module_family(stab_k);
                } else if (stab_family == "filtration") {
                    params["k"] = stab_k;
                    params["i"] = stab_i;
                    fam = ss::stability::filtration_module_family(stab_k, stab_i);
                } else {
                    throw std::invalid_argument("unknown rep family " + stab_family);
                }
                auto rep = ss::stability::rep_stability_report(fam, stab_nmin, stab_nmax);
                emit(stab_out,
                     ss::report::envelope("stability rep", params,
                                          ss::report::rep_report_json(rep)),
                     ss::report::rep_report_text(rep));
            } else {
                ss::stability::SetFamily fam;
                if (stab_family == "subsets") {
                    params["k"] = stab_k;
                    fam = ss::stability::subsets_set_family(stab_k);
                } else if (stab_family == "powerset") {
                    fam = ss::stability::powerset_set_family();
                } else if (stab_family == "natural") {
                    fam = ss::stability::natural_set_family();
                } else if (stab_family == "sign") {
                    fam = ss::stability::sign_set_family();
                } else {
                    throw std::invalid_argument("unknown action family " + stab_family);
                }
                auto rep = ss::stability::action_stability_report(fam, stab_nmin, stab_nmax);
                emit(stab_out,
                     ss::report::envelope("stability action", params,
                                          ss::report::action_report_json(rep)),
                     ss::report::action_report_text(rep));
            }
        } else if (omg->parsed()) {
            Json params;
            params["n"] = omg_n;
            auto bases = ss::arnold::omega_bases(omg_n);
            emit(omg_out,
                 ss::report::envelope("omega-bases", params, ss::report::omega_bases_json(bases)),
                 ss::report::omega_bases_text(bases));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

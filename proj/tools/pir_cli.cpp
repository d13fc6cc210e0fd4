// Command-line workbench around the pir library: fixture verification,
// constructions, bound queries, table rendering, and the integer programs.
//
// Exit codes: 0 success/valid, 1 invalid/infeasible, 2 budget/unknown,
// 3 usage error. All column labels read or written anywhere are 0-based.

#include <cctype>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pir/bounds.hpp"
#include "pir/constructions.hpp"
#include "pir/gf2.hpp"
#include "pir/ilp.hpp"
#include "pir/recovery.hpp"

namespace {

using namespace pir;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot write " + path);
    out << text;
    std::cout << "wrote " << path << "\n";
}

long long default_node_budget() {
    if (const char* env = std::getenv("PIR_NODE_BUDGET")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
        std::cerr << "ignoring malformed PIR_NODE_BUDGET\n";
    }
    return 10'000'000;  // desk scale: around a minute of search
}

std::string set_to_string(const RecoverySet& set) {
    std::string out = "{";
    for (std::size_t t = 0; t < set.size(); ++t)
        out += (t ? "," : "") + std::to_string(set[t]);
    return out + "}";
}

void print_sets(const RecoveryCertificate& cert) {
    std::cout << "recovery sets (0-based column labels)\n";
    for (int i = 0; i < cert.s; ++i) {
        std::cout << "  e" << i + 1 << ":";
        for (const RecoverySet& set : cert.sets[i]) std::cout << " " << set_to_string(set);
        std::cout << "\n";
    }
}

void save_code(const CertifiedCode& code, const std::string& matrix_path,
               const std::string& cert_path) {
    write_file(matrix_path, write_matrix(code.matrix));
    write_file(cert_path, certificate_to_json(code.certificate));
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string matrix_path, cert_path, emit_cert;
    int k = 0;
    bool show_sets = false;
    long long nodes = 0;
};

int run_verify(const VerifyArgs& a) {
    const ParseReport pr = parse_matrix(read_file(a.matrix_path));
    const GeneratorMatrix& g = pr.matrix;
    std::cout << "matrix: s=" << g.s << " n=" << g.n << " rank=" << pr.rank << "\n";
    std::cout << "min distance: " << min_distance(g) << "\n";

    if (!a.cert_path.empty()) {
        const RecoveryCertificate cert = certificate_from_json(read_file(a.cert_path));
        const ValidationReport rep = validate_certificate(g, a.k, cert);
        if (!rep.valid) {
            std::cout << "certificate: invalid\n";
            for (const Violation& v : rep.violations)
                std::cout << "  index " << v.i << " set " << v.set_index << ": " << v.reason
                          << "\n";
            return 1;
        }
        std::cout << "certificate: valid\n";
        if (a.show_sets) print_sets(cert);
        if (!a.emit_cert.empty()) write_file(a.emit_cert, certificate_to_json(cert));
        std::cout << a.k << "-PIR: yes\n";
        return 0;
    }

    const DecideResult d = decide_k_pir(g, a.k, a.nodes);
    if (d.decision == Decision::yes) {
        if (a.show_sets) print_sets(*d.certificate);
        if (!a.emit_cert.empty()) write_file(a.emit_cert, certificate_to_json(*d.certificate));
        std::cout << a.k << "-PIR: yes\n";
        return 0;
    }
    if (d.decision == Decision::no) {
        std::cout << a.k << "-PIR: no\n";
        return 1;
    }
    std::cout << a.k << "-PIR: unknown (search budget exhausted at lambda="
              << d.lambda_reached << ")\n";
    return 2;
}

// -------------------------------------------------------------- construct

int emit_construction(const CertifiedCode& code, const std::string& label,
                      std::string out_matrix, std::string out_cert) {
    std::cout << label << ": s=" << code.matrix.s << " n=" << code.matrix.n
              << " k=" << code.certificate.k << "\n";
    const std::string stem =
        label + "-" + std::to_string(code.matrix.s) + "x" + std::to_string(code.matrix.n);
    if (out_matrix.empty()) out_matrix = stem + ".matrix";
    if (out_cert.empty()) out_cert = stem + ".cert.json";
    save_code(code, out_matrix, out_cert);
    return 0;
}

CertifiedCode load_certified(const std::string& matrix_path, const std::string& cert_path) {
    CertifiedCode code;
    code.matrix = parse_matrix(read_file(matrix_path)).matrix;
    code.certificate = certificate_from_json(read_file(cert_path));
    const ValidationReport rep = validate_certificate(code.matrix, code.certificate.k,
                                                      code.certificate);
    if (!rep.valid)
        throw parse_error("input certificate does not validate against " + matrix_path);
    return code;
}

// ----------------------------------------------------------------- bounds

NTable make_table(const std::string& user_path) {
    NTable t = NTable::embedded();
    if (!user_path.empty()) t.load_file(user_path);
    return t;
}

int run_bounds(int s, int k, const std::string& ntable_path) {
    const NTable t = make_table(ntable_path);
    const BoundsEngine engine(t);
    const BoundResult lo = engine.best_lower(s, k);
    const BoundResult hi = engine.best_upper(s, k);
    std::cout << "lower " << lo.value << " upper " << hi.value << "\n";
    std::cout << trace_to_string(lo.trace);
    std::cout << trace_to_string(hi.trace);
    if (engine.materializable(s, k))
        std::cout << "construction: available (see `construct` or `catalog`)\n";
    return 0;
}

int run_table(int s_max, int k_max, const std::string& ntable_path) {
    const BoundsEngine engine(make_table(ntable_path));
    if (s_max > engine.s_max() || k_max > engine.k_max())
        throw std::out_of_range("grid larger than the engine range");
    // one marker letter per upper-bound source rule
    const std::map<std::string, char> markers = {
        {"catalog", 'c'},        {"simplex", 's'},      {"remove-lines", 'r'},
        {"identity", 'i'},       {"recorded-upper", 'R'}, {"puncture", 'p'},
        {"parity-extend", 'e'},  {"juxtapose", 'j'},    {"direct-sum", 'd'},
        {"lengthen", 'l'},
    };
    auto marker = [&](std::string& rule) {
        const auto it = markers.find(rule);
        if (it != markers.end()) return it->second;
        if (rule.rfind("closed-form-", 0) == 0) {
            rule = "closed-form";
            return 'f';
        }
        return '?';
    };

    std::vector<std::vector<std::string>> cells(s_max + 1);
    std::map<char, std::string> used;
    std::size_t width = 5;
    for (int s = 1; s <= s_max; ++s) {
        cells[s].resize(k_max + 1);
        for (int k = 1; k <= k_max; ++k) {
            const BoundResult lo = engine.best_lower(s, k);
            const BoundResult hi = engine.best_upper(s, k);
            std::string cell = std::to_string(lo.value);
            if (hi.value != lo.value) cell += "-" + std::to_string(hi.value);
            const char m = marker(hi.trace.rule);
            used.emplace(m, hi.trace.rule);
            cell += m;
            width = std::max(width, cell.size() + 1);
            cells[s][k] = std::move(cell);
        }
    }
    auto pad = [&](const std::string& text) {
        std::cout << text << std::string(width - text.size(), ' ');
    };
    pad("s\\k");
    for (int k = 1; k <= k_max; ++k) pad(std::to_string(k));
    std::cout << "\n";
    for (int s = 1; s <= s_max; ++s) {
        pad(std::to_string(s));
        for (int k = 1; k <= k_max; ++k) pad(cells[s][k]);
        std::cout << "\n";
    }
    std::cout << "cells: lower or lower-upper, marked by the upper-bound source\n";
    for (const auto& [m, rule] : used) std::cout << "  " << m << " " << rule << "\n";
    return 0;
}

// -------------------------------------------------------------------- ilp

struct IlpArgs {
    int s = 0, k = 0, lambda = 3;
    std::string mode = "exact";
    bool systematic = false, projective = false, lemma8 = false, repeat_cap = false,
         order_units = false;
    std::vector<std::string> symmetry;
    std::string lp_path, out_path, extract_prefix;
    long long nodes = 0, seed_lower = 0;
    bool has_seed = false, seed_from_bounds = false;
};

std::vector<std::vector<int>> parse_generators(const std::vector<std::string>& specs, int s) {
    std::vector<std::vector<int>> gens;
    for (const std::string& spec : specs) {
        std::vector<int> gen;
        std::istringstream in(spec);
        std::string item;
        while (std::getline(in, item, ',')) gen.push_back(std::stoi(item));
        if (static_cast<int>(gen.size()) != s)
            throw std::invalid_argument("--symmetry needs " + std::to_string(s) +
                                        " comma-separated images");
        gens.push_back(std::move(gen));
    }
    return gens;
}

IlpModel build_from_args(const IlpArgs& a) {
    if (a.mode == "lower") {
        if (a.systematic || a.projective || a.lemma8 || a.repeat_cap || a.order_units ||
            !a.symmetry.empty())
            throw std::invalid_argument("lower mode takes no flags or symmetry");
        return build_lower(a.s, a.k, a.lambda);
    }
    BuildFlags flags;
    flags.systematic = a.systematic;
    flags.projective = a.projective;
    flags.lemma8_cut = a.lemma8;
    flags.repeat_cap = a.repeat_cap;
    flags.order_units = a.order_units;
    IlpModel m = build_exact(a.s, a.k, a.lambda, flags);
    if (!a.symmetry.empty()) m = apply_symmetry(m, parse_generators(a.symmetry, a.s));
    return m;
}

// reads back exactly the dialect export_lp writes
IlpModel import_lp(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);

    IlpModel m;
    std::size_t at = 0;
    if (at < lines.size() && !lines[at].empty() && lines[at][0] == '\\') {
        std::istringstream meta(lines[at].substr(1));
        std::string tok;
        while (meta >> tok) {
            const auto eq = tok.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
            if (key == "mode") m.mode = val == "lower" ? IlpMode::lower : IlpMode::exact;
            if (key == "s") m.s = std::stoi(val);
            if (key == "k") m.k = std::stoi(val);
            if (key == "lambda") m.lambda = std::stoi(val);
        }
        ++at;
    }
    auto expect = [&](const std::string& keyword) {
        if (at >= lines.size() || lines[at] != keyword)
            throw parse_error("lp: expected `" + keyword + "` section");
        ++at;
    };

    // variables first, from the Bounds and General sections
    std::size_t bounds_at = at;
    while (bounds_at < lines.size() && lines[bounds_at] != "Bounds") ++bounds_at;
    if (bounds_at == lines.size()) throw parse_error("lp: missing Bounds section");
    std::map<std::string, int> ids;
    std::size_t scan = bounds_at + 1;
    for (; scan < lines.size() && lines[scan] != "General"; ++scan) {
        std::istringstream ls(lines[scan]);
        std::string le1, le2, name;
        long long lb, ub;
        if (!(ls >> lb >> le1 >> name >> le2 >> ub) || le1 != "<=" || le2 != "<=")
            throw parse_error("lp: malformed bound `" + lines[scan] + "`");
        ids[name] = static_cast<int>(m.vars.size());
        m.vars.push_back({name, lb, ub, false});
    }
    for (++scan; scan < lines.size() && lines[scan] != "End"; ++scan) {
        std::istringstream ls(lines[scan]);
        std::string name;
        ls >> name;
        const auto it = ids.find(name);
        if (it == ids.end()) throw parse_error("lp: integer variable without bounds: " + name);
        m.vars[it->second].integral = true;
    }

    auto parse_terms = [&](const std::string& expr) {
        std::vector<IlpTerm> terms;
        std::istringstream ts(expr);
        std::string tok;
        long long sign = 1;
        std::optional<long long> coeff;
        while (ts >> tok) {
            if (tok == "+" || tok == "-") {
                sign = tok == "-" ? -1 : 1;
            } else if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
                coeff = sign * std::stoll(tok);
            } else {
                const auto it = ids.find(tok);
                if (it == ids.end()) throw parse_error("lp: unknown variable " + tok);
                terms.push_back({it->second, coeff.value_or(sign)});
                sign = 1;
                coeff.reset();
            }
        }
        return terms;
    };

    expect("Minimize");
    std::string objective;
    while (at < lines.size() && lines[at] != "Subject To") objective += lines[at++] + " ";
    const auto colon = objective.find(':');
    m.objective = parse_terms(colon == std::string::npos ? objective
                                                         : objective.substr(colon + 1));
    expect("Subject To");
    for (; at < lines.size() && lines[at] != "Bounds"; ++at) {
        const auto split = lines[at].find(':');
        if (split == std::string::npos) throw parse_error("lp: row without name");
        IlpConstraint row;
        row.name = lines[at].substr(0, split);
        while (!row.name.empty() && row.name.front() == ' ') row.name.erase(0, 1);
        const std::string body = lines[at].substr(split + 1);
        std::size_t rel, skip = 2;
        if ((rel = body.find("<=")) != std::string::npos) {
            row.sense = Sense::le;
        } else if ((rel = body.find(">=")) != std::string::npos) {
            row.sense = Sense::ge;
        } else if ((rel = body.find('=')) != std::string::npos) {
            row.sense = Sense::eq;
            skip = 1;
        } else {
            throw parse_error("lp: row without relation");
        }
        row.rhs = std::stoll(body.substr(rel + skip));
        row.terms = parse_terms(body.substr(0, rel));
        m.cons.push_back(std::move(row));
    }
    return m;
}

int run_ilp_build(const IlpArgs& a) {
    const IlpModel m = build_from_args(a);
    const std::string text = export_lp(m);
    if (a.out_path.empty()) {
        std::cout << text;
    } else {
        write_file(a.out_path, text);
        std::cout << "model: " << m.vars.size() << " variables, " << m.cons.size() << " rows\n";
    }
    return 0;
}

int run_ilp_solve(const IlpArgs& a) {
    std::optional<IlpModel> model;
    if (!a.lp_path.empty()) {
        if (a.s || a.k) throw std::invalid_argument("--lp replaces --s/--k");
        if (!a.extract_prefix.empty())
            throw std::invalid_argument("--extract needs a built model, not --lp");
        model = import_lp(read_file(a.lp_path));
    } else {
        model = build_from_args(a);
    }
    SolveOptions opt;
    opt.node_budget = a.nodes;
    if (a.seed_from_bounds) {
        if (model->mode != IlpMode::exact)
            throw std::invalid_argument("--seed-from-bounds is sound for exact mode only");
        opt.seed_lower = best_lower(model->s, model->k).value;
    } else if (a.has_seed) {
        opt.seed_lower = a.seed_lower;
    }
    const SolveOutcome out = solve(*model, opt);
    std::cout << out.trailer() << "\n";
    switch (out.status) {
        case SolveStatus::optimal:
            if (!a.extract_prefix.empty()) {
                const auto [g, cert] = extract_code(*model, out);
                save_code({g, cert}, a.extract_prefix + ".matrix",
                          a.extract_prefix + ".cert.json");
            }
            return 0;
        case SolveStatus::infeasible:
            return 1;
        case SolveStatus::bounds_interval:
            std::cout << "proven: [" << out.proven_lower << ", " << out.objective << "]\n";
            return 2;
        case SolveStatus::budget:
            std::cout << "proven lower: " << out.proven_lower << "\n";
            return 2;
    }
    return 2;
}

// --------------------------------------------------------------- lengthen

int run_lengthen(const std::string& matrix_path, const std::string& cert_path, int t,
                 const LengthenOptions& opt, const std::string& out_prefix) {
    const CertifiedCode base = load_certified(matrix_path, cert_path);
    const std::vector<CertifiedCode> found = lengthen_search(base, t, opt);
    if (found.empty()) {
        std::cout << "no extension with t=" << t << "\n";
        return 1;
    }
    for (std::size_t c = 0; c < found.size(); ++c) {
        const CertifiedCode& code = found[c];
        std::string row;
        for (int j = 0; j < base.matrix.n; ++j)
            row += (code.matrix.cols[j] >> base.matrix.s & 1) ? '1' : '0';
        std::cout << "extension " << c << ": row " << row << " -> s=" << code.matrix.s
                  << " n=" << code.matrix.n << " k=" << code.certificate.k << "\n";
        if (!out_prefix.empty())
            save_code(code, out_prefix + std::to_string(c) + ".matrix",
                      out_prefix + std::to_string(c) + ".cert.json");
    }
    return 0;
}

// ---------------------------------------------------------------- catalog

int run_catalog(const std::string& id, const std::string& out_matrix,
                const std::string& out_cert) {
    if (id.empty()) {
        std::printf("%-14s %3s %3s %3s  %-9s %s\n", "id", "s", "n", "k", "kind", "note");
        for (const CatalogEntry& e : catalog_entries())
            std::printf("%-14s %3d %3d %3d  %-9s %s\n", e.id.c_str(), e.s, e.n, e.k,
                        e.kind == EntryKind::certified ? "certified" : "reference",
                        e.note.c_str());
        return 0;
    }
    for (const CatalogEntry& e : catalog_entries()) {
        if (e.id != id) continue;
        std::cout << "id: " << e.id << "\ns=" << e.s << " n=" << e.n << " k=" << e.k
                  << " kind=" << (e.kind == EntryKind::certified ? "certified" : "reference")
                  << "\n"
                  << "note: " << e.note << "\n";
        if (out_matrix.empty() && out_cert.empty()) {
            std::cout << write_matrix(e.matrix);
            return 0;
        }
        if (!out_matrix.empty()) write_file(out_matrix, write_matrix(e.matrix));
        if (!out_cert.empty()) {
            if (!e.certificate) {
                std::cout << "entry carries no certificate\n";
                return 1;
            }
            write_file(out_cert, certificate_to_json(*e.certificate));
        }
        return 0;
    }
    std::cout << "no catalog entry " << id << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "pir: workbench for binary k-PIR codes.\n"
        "Column labels in every certificate, recovery set, and report are 0-based\n"
        "(units stay e_1..e_s). Search budgets default to 10^7 nodes, roughly a\n"
        "minute; PIR_NODE_BUDGET overrides the default, --nodes overrides both."};
    app.require_subcommand(1);
    bool deterministic = false, timing = false;
    int jobs = 1;
    app.add_flag("--deterministic", deterministic,
                 "suppress timing output (byte-identical runs; file outputs always are)");
    app.add_flag("--timing", timing, "report wall time per command on stderr");
    app.add_option("--jobs", jobs, "worker cap for future parallel search (runs serial today)");

    VerifyArgs verify;
    verify.nodes = default_node_budget();
    CLI::App* v = app.add_subcommand("verify", "validate a certificate or decide k-PIR");
    v->add_option("--matrix", verify.matrix_path, "generator matrix file")
        ->required()
        ->check(CLI::ExistingFile);
    v->add_option("--k", verify.k, "number of disjoint recovery sets")->required();
    v->add_option("--cert", verify.cert_path, "certificate to validate (JSON, 0-based)")
        ->check(CLI::ExistingFile);
    v->add_option("--emit-cert", verify.emit_cert, "write the validated/found certificate");
    v->add_flag("--show-sets", verify.show_sets, "print recovery sets, 0-based columns");
    v->add_option("--nodes", verify.nodes, "decision search budget");

    CLI::App* c = app.add_subcommand("construct", "build certified codes");
    c->require_subcommand(1);
    int cs = 0, clines = 0;
    std::string c_out_matrix, c_out_cert;
    CLI::App* csx = c->add_subcommand("simplex", "all nonzero points once");
    csx->add_option("--s", cs, "dimension")->required();
    CLI::App* crl = c->add_subcommand("remove-lines", "simplex minus a partial line spread");
    crl->add_option("--s", cs, "dimension")->required();
    crl->add_option("--lines", clines, "spread lines to delete")->required();
    CLI::App* ccb = c->add_subcommand("combine", "lift certified inputs");
    std::string c_op, c_a_matrix, c_a_cert, c_b_matrix, c_b_cert;
    ccb->add_option("--op", c_op, "juxtapose | direct-sum | parity-extend")->required();
    ccb->add_option("--a", c_a_matrix, "first matrix")->required()->check(CLI::ExistingFile);
    ccb->add_option("--cert-a", c_a_cert, "first certificate")
        ->required()
        ->check(CLI::ExistingFile);
    ccb->add_option("--b", c_b_matrix, "second matrix")->check(CLI::ExistingFile);
    ccb->add_option("--cert-b", c_b_cert, "second certificate")->check(CLI::ExistingFile);
    for (CLI::App* sub : {csx, crl, ccb}) {
        sub->add_option("--out-matrix", c_out_matrix, "matrix output path");
        sub->add_option("--out-cert", c_out_cert, "certificate output path");
    }

    int bs = 0, bk = 0;
    std::string b_ntable;
    CLI::App* b = app.add_subcommand("bounds", "best lower/upper bounds with trace");
    b->add_option("--s", bs, "dimension")->required();
    b->add_option("--k", bk, "servers")->required();
    b->add_option("--ntable", b_ntable, "extra best-known-length entries (s k value lines)")
        ->check(CLI::ExistingFile);

    int ts = 10, tk = 16;
    std::string t_ntable;
    CLI::App* t = app.add_subcommand("table", "render the bounds grid");
    t->add_option("--smax", ts, "largest dimension");
    t->add_option("--kmax", tk, "largest server count");
    t->add_option("--ntable", t_ntable, "extra best-known-length entries")
        ->check(CLI::ExistingFile);

    IlpArgs ilp;
    ilp.nodes = default_node_budget();
    CLI::App* ib = app.add_subcommand("ilp-build", "emit a model in LP text format");
    CLI::App* is = app.add_subcommand("ilp-solve", "solve a model by branch and bound");
    for (CLI::App* sub : {ib, is}) {
        sub->add_option("--s", ilp.s, "dimension");
        sub->add_option("--k", ilp.k, "servers");
        sub->add_option("--lambda", ilp.lambda, "recovery-set size cap");
        sub->add_option("--mode", ilp.mode, "exact | lower")
            ->check(CLI::IsMember({"exact", "lower"}));
        sub->add_flag("--systematic", ilp.systematic, "force unit columns");
        sub->add_flag("--projective", ilp.projective, "distinct columns");
        sub->add_flag("--lemma8-cut", ilp.lemma8, "multiplicity-cap rows");
        sub->add_flag("--repeat-cap", ilp.repeat_cap, "x <= k (heuristic)");
        sub->add_flag("--order-units", ilp.order_units, "sort unit-column counts");
        sub->add_option("--symmetry", ilp.symmetry,
                        "prescribe a coordinate permutation, e.g. 1,2,0 (repeatable)");
    }
    ib->add_option("--out", ilp.out_path, "LP output path (default stdout)");
    is->add_option("--lp", ilp.lp_path, "solve a previously exported model")
        ->check(CLI::ExistingFile);
    is->add_option("--nodes", ilp.nodes, "node budget");
    is->add_option("--seed-lower", ilp.seed_lower, "externally proven optimum floor");
    is->add_flag("--seed-from-bounds", ilp.seed_from_bounds,
                 "seed exact models from the bounds grid");
    is->add_option("--extract", ilp.extract_prefix, "write <prefix>.matrix/.cert.json");
    is->callback([&] { ilp.has_seed = is->count("--seed-lower") > 0; });

    std::string l_matrix, l_cert, l_prefix;
    int lt = 1;
    LengthenOptions lopt;
    CLI::App* l = app.add_subcommand("lengthen", "search one-row extensions");
    l->add_option("--matrix", l_matrix, "certified base matrix")
        ->required()
        ->check(CLI::ExistingFile);
    l->add_option("--cert", l_cert, "certificate of the base")
        ->required()
        ->check(CLI::ExistingFile);
    l->add_option("--t", lt, "new unit columns")->required();
    l->add_option("--max-results", lopt.max_results, "extensions to keep");
    l->add_option("--row-budget", lopt.row_budget, "extension rows to scan");
    l->add_option("--zset-cap", lopt.zset_size_cap, "zero-sum set size cap");
    l->add_option("--clique-budget", lopt.clique_node_budget, "clique search nodes");
    l->add_option("--out-prefix", l_prefix, "write <prefix><i>.matrix/.cert.json");

    std::string cat_id, cat_matrix, cat_cert;
    CLI::App* cat = app.add_subcommand("catalog", "list or dump embedded fixtures");
    cat->add_option("--id", cat_id, "entry to dump (default: list all)");
    cat->add_option("--out-matrix", cat_matrix, "matrix output path");
    cat->add_option("--out-cert", cat_cert, "certificate output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    const auto started = std::chrono::steady_clock::now();
    int rc = 0;
    try {
        if (v->parsed()) rc = run_verify(verify);
        if (csx->parsed())
            rc = emit_construction(simplex(cs), "simplex", c_out_matrix, c_out_cert);
        if (crl->parsed())
            rc = emit_construction(remove_lines(cs, clines), "remove-lines", c_out_matrix,
                                   c_out_cert);
        if (ccb->parsed()) {
            const CertifiedCode a = load_certified(c_a_matrix, c_a_cert);
            CertifiedCode out;
            if (c_op == "parity-extend") {
                out = combine_parity_extend(a);
            } else {
                if (c_b_matrix.empty() || c_b_cert.empty())
                    throw std::invalid_argument(c_op + " needs --b and --cert-b");
                const CertifiedCode bcode = load_certified(c_b_matrix, c_b_cert);
                out = c_op == "juxtapose" ? combine_juxtapose(a, bcode)
                    : c_op == "direct-sum"
                        ? combine_direct_sum(a, bcode)
                        : throw std::invalid_argument("unknown combine op " + c_op);
            }
            rc = emit_construction(out, c_op, c_out_matrix, c_out_cert);
        }
        if (b->parsed()) rc = run_bounds(bs, bk, b_ntable);
        if (t->parsed()) rc = run_table(ts, tk, t_ntable);
        if (ib->parsed()) rc = run_ilp_build(ilp);
        if (is->parsed()) rc = run_ilp_solve(ilp);
        if (l->parsed()) rc = run_lengthen(l_matrix, l_cert, lt, lopt, l_prefix);
        if (cat->parsed()) rc = run_catalog(cat_id, cat_matrix, cat_cert);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = 1;
    } catch (const budget_error& e) {
        std::cerr << "budget: " << e.what() << "\n";
        rc = 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        rc = 3;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage: " << e.what() << "\n";
        rc = 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = 1;
    }
    if (timing && !deterministic) {
        const std::chrono::duration<double> took = std::chrono::steady_clock::now() - started;
        std::fprintf(stderr, "time: %.2fs\n", took.count());
    }
    return rc;
}

// plab: adjacency labeling schemes for sparse and power-law graphs.
// Subcommands: fit, label, sweep, generate, verify, embed, report.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "plab/generators.hpp"
#include "plab/graph.hpp"
#include "plab/labeling.hpp"
#include "plab/powerlaw.hpp"

namespace fs = std::filesystem;
using namespace plab;

namespace {

std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// default outputs land in $PLAB_OUT_DIR when it is set; explicit --out paths
// are taken verbatim
std::string out_path(const std::string& name) {
    const char* dir = std::getenv("PLAB_OUT_DIR");
    if (!dir || !*dir) return name;
    return (fs::path(dir) / name).string();
}

PayloadMode parse_mode(const std::string& s) {
    if (s == "bitstring") return PayloadMode::BITSTRING;
    if (s == "concat") return PayloadMode::CONCAT;
    throw CLI::ValidationError("--mode", "expected 'bitstring' or 'concat'");
}

const char* mode_name(PayloadMode m) {
    return m == PayloadMode::BITSTRING ? "bitstring" : "concat";
}

std::optional<double> fit_or_none(const Graph& g, uint32_t xmin = 1) {
    try {
        return fit_alpha_mle(degree_histogram(g), xmin);
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

struct AlphaChoice {
    std::optional<double> used;   // flag value if given, else fitted
    std::optional<double> fitted; // always the MLE when computable
};

AlphaChoice pick_alpha(const Graph& g, const std::optional<double>& flag) {
    AlphaChoice a;
    a.fitted = fit_or_none(g);
    a.used = flag ? flag : a.fitted;
    return a;
}

uint32_t resolve_threshold(const std::string& token, const Graph& g, const std::optional<double>& alpha) {
    uint64_t n = g.num_vertices();
    if (token == "predicted") {
        if (!alpha) throw DomainError("threshold 'predicted' needs --alpha or a fittable graph");
        return predicted_threshold(n, *alpha);
    }
    if (token == "sparse") {
        if (n == 0) throw DomainError("threshold 'sparse' needs a non-empty graph");
        double c = static_cast<double>(g.num_edges()) / static_cast<double>(n);
        return sparse_threshold(n, c);
    }
    if (token == "powerlaw") {
        if (!alpha) throw DomainError("threshold 'powerlaw' needs --alpha or a fittable graph");
        return powerlaw_threshold(n, *alpha, constants(n, *alpha).Cprime);
    }
    try {
        size_t pos = 0;
        long long v = std::stoll(token, &pos);
        if (pos != token.size() || v < 1) throw std::invalid_argument("");
        return static_cast<uint32_t>(v);
    } catch (const std::exception&) {
        throw CLI::ValidationError("--threshold", "expected predicted|sparse|powerlaw|<positive int>");
    }
}

std::string payload_hex(const Label& l, uint32_t header_bits) {
    if (l.nbits <= header_bits) return "-";
    auto bytes = slice_bits(l.bytes, header_bits, l.nbits - header_bits);
    std::string s;
    s.reserve(2 * bytes.size());
    static const char* x = "0123456789abcdef";
    for (uint8_t b : bytes) {
        s += x[b >> 4];
        s += x[b & 15];
    }
    return s;
}

int run_fit(const std::string& input, uint32_t xmin) {
    LoadedGraph lg = load_edge_list_file(input);
    if (lg.g.num_vertices() == 0) {
        std::cerr << "error: " << input << ": empty graph (n=0), nothing to fit\n";
        return 1;
    }
    double alpha = fit_alpha_mle(degree_histogram(lg.g), xmin);
    std::cout << "n=" << lg.g.num_vertices() << "\n"
              << "m=" << lg.g.num_edges() << "\n"
              << "maxdeg=" << lg.g.max_degree() << "\n"
              << "alpha=" << fmt_g(alpha) << "\n";
    return 0;
}

int run_label(const std::string& input, std::optional<double> alpha_flag, const std::string& thr_token,
              const std::string& mode_str, std::string out) {
    LoadedGraph lg = load_edge_list_file(input);
    PayloadMode mode = parse_mode(mode_str);
    AlphaChoice alpha = pick_alpha(lg.g, alpha_flag);
    uint32_t threshold = resolve_threshold(thr_token, lg.g, alpha.used);
    LabelSet ls = encode(lg.g, threshold, mode);

    uint64_t maxbits = 0, totalbits = 0;
    for (const auto& l : ls.labels) {
        maxbits = std::max<uint64_t>(maxbits, l.nbits);
        totalbits += l.nbits;
    }
    if (out.empty()) out = out_path(fs::path(input).stem().string() + ".labels");
    std::ofstream f(out);
    if (!f) throw Error("cannot write '" + out + "'");
    f << "# plab labels n=" << ls.scheme.n << " idbits=" << ls.scheme.idbits
      << " threshold=" << ls.scheme.threshold << " mode=" << mode_name(mode)
      << " fat=" << ls.scheme.fat_count << "\n";
    for (uint32_t v = 0; v < ls.scheme.n; ++v) {
        const Label& l = ls.labels[v];
        f << lg.external_id[v] << " " << ls.id_of[v] << " " << (lg.g.degree(v) >= threshold ? 1 : 0)
          << " " << l.nbits << " " << payload_hex(l, 1 + ls.scheme.idbits) << "\n";
    }
    if (!f) throw Error("write failed for '" + out + "'");

    std::cout << "n=" << ls.scheme.n << "\n"
              << "m=" << lg.g.num_edges() << "\n"
              << "maxdeg=" << lg.g.max_degree() << "\n"
              << "alpha=" << (alpha.used ? fmt_g(*alpha.used) : "-") << "\n"
              << "alpha_fitted=" << (alpha.fitted ? fmt_g(*alpha.fitted) : "-") << "\n"
              << "threshold=" << threshold << "\n"
              << "mode=" << mode_name(mode) << "\n"
              << "idbits=" << ls.scheme.idbits << "\n"
              << "fat=" << ls.scheme.fat_count << "\n"
              << "max_label_bits=" << maxbits << "\n"
              << "total_label_bits=" << totalbits << "\n"
              << "out=" << out << "\n";
    return 0;
}

int run_sweep(const std::string& input, std::optional<double> alpha_flag, const std::string& mode_str,
              std::string out) {
    LoadedGraph lg = load_edge_list_file(input);
    PayloadMode mode = parse_mode(mode_str);
    AlphaChoice alpha = pick_alpha(lg.g, alpha_flag);
    ThresholdSweep s = sweep_thresholds(lg.g, mode);

    if (out.empty()) out = out_path(fs::path(input).stem().string() + ".sweep.csv");
    std::ofstream f(out);
    if (!f) throw Error("cannot write '" + out + "'");
    f << "threshold,max_thin_bits,max_fat_bits,max_bits\n";
    for (size_t i = 0; i < s.max_bits.size(); ++i)
        f << (i + 1) << "," << s.max_thin_bits[i] << "," << s.max_fat_bits[i] << "," << s.max_bits[i] << "\n";
    std::string pt, pb;
    if (alpha.used && lg.g.num_vertices() >= 2) {
        uint32_t t = predicted_threshold(lg.g.num_vertices(), *alpha.used);
        pt = std::to_string(t);
        pb = std::to_string(max_label_bits_at(lg.g, t, mode));
    }
    f << "# empirical_threshold=" << s.empirical_threshold << ",empirical_max_bits=" << s.empirical_max_bits
      << ",predicted_threshold=" << pt << ",predicted_max_bits=" << pb << "\n";
    if (!f) throw Error("write failed for '" + out + "'");

    std::cout << "empirical_threshold=" << s.empirical_threshold << "\n"
              << "empirical_max_bits=" << s.empirical_max_bits << "\n"
              << "predicted_threshold=" << (pt.empty() ? "-" : pt) << "\n"
              << "predicted_max_bits=" << (pb.empty() ? "-" : pb) << "\n"
              << "out=" << out << "\n";
    return 0;
}

void print_generated_summary(const Graph& g, const std::string& out) {
    auto fitted = fit_or_none(g);
    std::cout << "n=" << g.num_vertices() << "\n"
              << "m=" << g.num_edges() << "\n"
              << "maxdeg=" << g.max_degree() << "\n"
              << "alpha_fitted=" << (fitted ? fmt_g(*fitted) : "-") << "\n"
              << "out=" << out << "\n";
}

int run_generate(const std::string& kind, uint32_t n, std::optional<double> alpha, std::optional<uint32_t> m,
                 uint64_t seed, std::string out, const std::string& log_out) {
    if (kind == "powerlaw") {
        if (!alpha) throw CLI::ValidationError("--alpha", "required for --kind powerlaw");
        if (m) throw CLI::ValidationError("--m", "not meaningful for --kind powerlaw");
        Graph g = generate_powerlaw_graph(n, *alpha, seed);
        if (out.empty())
            out = out_path("powerlaw_n" + std::to_string(n) + "_a" + fmt_g(*alpha) + "_s" +
                           std::to_string(seed) + ".edges");
        std::ostringstream hdr;
        hdr << "generated kind=powerlaw n=" << n << " alpha=" << fmt_g(*alpha) << " seed=" << seed;
        write_edge_list_file(g, out, hdr.str());
        print_generated_summary(g, out);
        return 0;
    }
    if (kind == "ba") {
        if (!m) throw CLI::ValidationError("--m", "required for --kind ba");
        if (alpha) throw CLI::ValidationError("--alpha", "not meaningful for --kind ba");
        BaResult r = generate_ba(n, *m, seed);
        if (out.empty())
            out = out_path("ba_n" + std::to_string(n) + "_m" + std::to_string(*m) + "_s" +
                           std::to_string(seed) + ".edges");
        std::ostringstream hdr;
        hdr << "generated kind=ba n=" << n << " m=" << *m << " seed=" << seed;
        write_edge_list_file(r.g, out, hdr.str());
        if (!log_out.empty()) {
            std::ofstream f(log_out);
            if (!f) throw Error("cannot write '" + log_out + "'");
            for (uint32_t v = 0; v < r.log.attach.size(); ++v) {
                f << (r.log.n0 + v) << ":";
                for (uint32_t t : r.log.attach[v]) f << " " << t;
                f << "\n";
            }
        }
        print_generated_summary(r.g, out);
        return 0;
    }
    throw CLI::ValidationError("--kind", "expected 'powerlaw' or 'ba'");
}

int run_verify(const std::string& input, double alpha, const std::string& family) {
    LoadedGraph lg = load_edge_list_file(input);
    std::cout << "family=" << family << "\n";
    if (lg.g.num_vertices() == 0) { // nothing to violate
        std::cout << "member=true\n";
        return 0;
    }
    PlConstants c = constants(lg.g.num_vertices(), alpha);
    DegreeHistogram h = degree_histogram(lg.g);
    MembershipReport r;
    if (family == "palpha")
        r = verify_palpha(h, c);
    else if (family == "proper")
        r = verify_proper(h, c);
    else
        throw CLI::ValidationError("--family", "expected 'palpha' or 'proper'");
    std::cout << "member=" << (r.member ? "true" : "false") << "\n";
    for (const auto& v : r.violations)
        std::cout << "violation cond=" << v.condition << " k=" << v.k << " observed=" << fmt_g(v.observed)
                  << " allowed=" << fmt_g(v.allowed) << "\n";
    return r.member ? 0 : 2;
}

int run_embed(const std::string& h_input, uint32_t n, double alpha, uint64_t seed, std::string out_graph,
              std::string out_mapping) {
    LoadedGraph lh = load_edge_list_file(h_input);
    Embedding em = embed_lower_bound(lh.g, n, alpha, seed);
    if (out_graph.empty()) out_graph = out_path("embedded_n" + std::to_string(n) + ".edges");
    if (out_mapping.empty()) out_mapping = out_path("embedded_n" + std::to_string(n) + ".map");
    std::ostringstream hdr;
    hdr << "embedded H=" << fs::path(h_input).filename().string() << " n=" << n << " alpha=" << fmt_g(alpha)
        << " seed=" << seed;
    write_edge_list_file(em.g, out_graph, hdr.str());
    std::ofstream f(out_mapping);
    if (!f) throw Error("cannot write '" + out_mapping + "'");
    for (uint32_t a = 0; a < em.h_to_g.size(); ++a) f << a << " " << em.h_to_g[a] << "\n";
    if (!f) throw Error("write failed for '" + out_mapping + "'");
    std::cout << "n=" << em.g.num_vertices() << "\n"
              << "m=" << em.g.num_edges() << "\n"
              << "i1=" << em.consts.i1 << "\n"
              << "verified=true\n"
              << "out_graph=" << out_graph << "\n"
              << "out_mapping=" << out_mapping << "\n";
    return 0;
}

int run_report(const std::vector<std::string>& inputs, const std::vector<double>& alphas,
               const std::string& mode_str, const std::string& out) {
    PayloadMode mode = parse_mode(mode_str);
    if (alphas.size() > inputs.size())
        throw CLI::ValidationError("--alpha", "more --alpha overrides than inputs");
    std::ostream* os = &std::cout;
    std::ofstream f;
    if (!out.empty()) {
        f.open(out);
        if (!f) throw Error("cannot write '" + out + "'");
        os = &f;
    }
    *os << "dataset,n,m,maxdeg,alpha,predicted_threshold,predicted_max_bits,empirical_threshold,"
           "empirical_max_bits,powerlaw_bound_bits,sparse_bound_bits,bd_bound_bits,aktz_bound_bits,mode,seed\n";
    size_t emitted = 0;
    for (size_t i = 0; i < inputs.size(); ++i) {
        try {
            LoadedGraph lg = load_edge_list_file(inputs[i]);
            const Graph& g = lg.g;
            uint64_t n = g.num_vertices();
            std::optional<double> alpha =
                i < alphas.size() ? std::optional<double>(alphas[i]) : fit_or_none(g);

            std::string a_s, pt_s, pb_s, plb_s, spb_s, bdb_s, ak_s, et_s, eb_s;
            if (alpha) a_s = fmt_g(*alpha);
            if (alpha && n >= 2) {
                uint32_t t = predicted_threshold(n, *alpha);
                pt_s = std::to_string(t);
                pb_s = std::to_string(max_label_bits_at(g, t, mode));
            }
            if (n >= 1) {
                ThresholdSweep s = sweep_thresholds(g, mode);
                et_s = std::to_string(s.empirical_threshold);
                eb_s = std::to_string(s.empirical_max_bits);
            }
            if (alpha && n >= 3)
                plb_s = std::to_string(powerlaw_label_bound(n, *alpha, constants(n, *alpha).Cprime));
            if (n >= 3)
                spb_s = std::to_string(
                    sparse_label_bound(n, static_cast<double>(g.num_edges()) / static_cast<double>(n)));
            bdb_s = std::to_string(bd_label_bound(n, g.max_degree()));
            ak_s = std::to_string(aktz_label_bound(n));

            *os << fs::path(inputs[i]).stem().string() << "," << n << "," << g.num_edges() << ","
                << g.max_degree() << "," << a_s << "," << pt_s << "," << pb_s << "," << et_s << "," << eb_s
                << "," << plb_s << "," << spb_s << "," << bdb_s << "," << ak_s << "," << mode_name(mode)
                << ",\n";
            ++emitted;
        } catch (const Error& e) {
            std::cerr << "error: " << inputs[i] << ": " << e.what() << "\n";
        }
    }
    if (!out.empty() && !f) throw Error("write failed for '" + out + "'");
    return emitted > 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"adjacency labeling schemes for sparse and power-law graphs"};
    app.require_subcommand(1);

    // fit
    auto* fit = app.add_subcommand("fit", "fit the degree-distribution exponent");
    std::string fit_input;
    uint32_t fit_xmin = 1;
    fit->add_option("input", fit_input, "edge-list file")->required();
    fit->add_option("--xmin", fit_xmin, "smallest degree included in the fit (default 1)");

    // label
    auto* label = app.add_subcommand("label", "encode labels and dump them");
    std::string lab_input, lab_thr = "predicted", lab_mode = "concat", lab_out;
    std::optional<double> lab_alpha;
    label->add_option("input", lab_input, "edge-list file")->required();
    label->add_option("--alpha", lab_alpha, "exponent (fitted when omitted)");
    label->add_option("--threshold", lab_thr, "predicted|sparse|powerlaw|<int> (default predicted)");
    label->add_option("--mode", lab_mode, "bitstring|concat (default concat)");
    label->add_option("--out", lab_out, "label dump path");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "max label size per threshold");
    std::string sw_input, sw_mode = "concat", sw_out;
    std::optional<double> sw_alpha;
    sweep->add_option("input", sw_input, "edge-list file")->required();
    sweep->add_option("--alpha", sw_alpha, "exponent for the predicted-threshold trailer");
    sweep->add_option("--mode", sw_mode, "bitstring|concat (default concat)");
    sweep->add_option("--out", sw_out, "CSV path");

    // generate
    auto* gen = app.add_subcommand("generate", "synthesize a graph");
    std::string g_kind, g_out, g_logout;
    uint32_t g_n = 0;
    std::optional<double> g_alpha;
    std::optional<uint32_t> g_m;
    uint64_t g_seed = 1;
    gen->add_option("--kind", g_kind, "powerlaw|ba")->required();
    gen->add_option("--n", g_n, "vertex count")->required();
    gen->add_option("--alpha", g_alpha, "exponent (powerlaw)");
    gen->add_option("--m", g_m, "attachment parameter (ba)");
    gen->add_option("--seed", g_seed, "RNG seed (default 1)");
    gen->add_option("--out", g_out, "edge-list path");
    gen->add_option("--log-out", g_logout, "attachment log path (ba)");

    // verify
    auto* ver = app.add_subcommand("verify", "test family membership");
    std::string v_input, v_family;
    double v_alpha = 0;
    ver->add_option("input", v_input, "edge-list file")->required();
    ver->add_option("--alpha", v_alpha, "exponent")->required();
    ver->add_option("--family", v_family, "palpha|proper")->required();

    // embed
    auto* emb = app.add_subcommand("embed", "wrap H into a verifier-accepted power-law graph");
    std::string e_h, e_outg, e_outm;
    uint32_t e_n = 0;
    double e_alpha = 0;
    uint64_t e_seed = 1;
    emb->add_option("--h-input", e_h, "edge list of H (|V| must equal i1)")->required();
    emb->add_option("--n", e_n, "target vertex count")->required();
    emb->add_option("--alpha", e_alpha, "exponent (> 2)")->required();
    emb->add_option("--seed", e_seed, "RNG seed (default 1)");
    emb->add_option("--out-graph", e_outg, "output edge list");
    emb->add_option("--out-mapping", e_outm, "output `h_vertex g_vertex` lines");

    // report
    auto* rep = app.add_subcommand("report", "per-dataset experiment table (CSV)");
    std::vector<std::string> r_inputs;
    std::vector<double> r_alphas;
    std::string r_mode = "concat", r_out;
    rep->add_option("inputs", r_inputs, "edge-list files")->required();
    rep->add_option("--alpha", r_alphas, "per-input exponent overrides (positional match)");
    rep->add_option("--mode", r_mode, "bitstring|concat (default concat)");
    rep->add_option("--out", r_out, "CSV path (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*fit) return run_fit(fit_input, fit_xmin);
        if (*label) return run_label(lab_input, lab_alpha, lab_thr, lab_mode, lab_out);
        if (*sweep) return run_sweep(sw_input, sw_alpha, sw_mode, sw_out);
        if (*gen) return run_generate(g_kind, g_n, g_alpha, g_m, g_seed, g_out, g_logout);
        if (*ver) return run_verify(v_input, v_alpha, v_family);
        if (*emb) return run_embed(e_h, e_n, e_alpha, e_seed, e_outg, e_outm);
        if (*rep) return run_report(r_inputs, r_alphas, r_mode, r_out);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const Infeasible& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

#include "latmine/cli.hpp"

#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "latmine/errors.hpp"
#include "latmine/formats.hpp"
#include "latmine/lattice.hpp"
#include "latmine/miner.hpp"
#include "latmine/postprocess.hpp"
#include "latmine/preprocess.hpp"
#include "latmine/report.hpp"
#include "latmine/rules.hpp"
#include "latmine/toolbox.hpp"

namespace latmine::cli {

namespace {

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

bool ends_with(const std::string& s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// "MIN:MAX", "N" (exact), "MIN:" or ":MAX".
LengthRange parse_range(const std::string& text) {
    auto to_size = [&](const std::string& part, std::size_t fallback) -> std::size_t {
        if (part.empty()) return fallback;
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != part.size() || part.front() == '-')
            throw ConstraintError("invalid length range '" + text + "'");
        return static_cast<std::size_t>(v);
    };
    LengthRange r;
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        r.min = r.max = to_size(text, 0);
        if (text.empty()) throw ConstraintError("empty length range");
    } else {
        r.min = to_size(text.substr(0, colon), 0);
        r.max = to_size(text.substr(colon + 1), static_cast<std::size_t>(-1));
    }
    return r;
}

struct Invocation {
    Invocation(std::istream& input_stream, std::ostream& output_stream) : in(input_stream), out(output_stream) {}

    std::istream& in;
    std::ostream& out;

    std::string input = "-";
    std::string in_format;
    std::string out_format;
    std::string format = "text";

    std::string minsup = "1";
    double minconf = 0.5;
    std::string set = "fi";
    std::string strategy = "levelwise";
    std::string basis = "all";
    unsigned threads = 0;
    bool classes = false;
    std::string color;

    std::size_t bins = 2;
    std::string binning = "width";
    bool label_column = false;

    std::string objects, attributes;
    std::optional<std::size_t> min_col_support;
    std::string to;

    bool dot = false;
    std::string labels = "full";
    std::size_t max_attributes = 20;

    std::string premise_len, consequent_len, contain, exclude, side = "either", context_path;
    std::size_t top = 10;
    std::string by = "confidence";

    std::size_t rows = 0, cols = 0;
    double density = 0.5;
    std::uint64_t seed = 0;

    std::string read_input() const {
        if (input == "-") return std::string(std::istreambuf_iterator<char>(in), {});
        return read_file(input);
    }

    std::string detect_format(const std::string& text) const {
        if (!in_format.empty()) return in_format;
        if (ends_with(input, ".cxt")) return "cxt";
        if (ends_with(input, ".csv")) return "csv";
        if (ends_with(input, ".tab") || input != "-") return "tab";
        // Standard input: a CXT document opens with "B" and a blank line.
        std::istringstream lines(text);
        std::string first, second;
        std::getline(lines, first);
        std::getline(lines, second);
        if (!first.empty() && first.back() == '\r') first.pop_back();
        if (first == "B" && second.find_first_not_of(" \t\r") == std::string::npos) return "cxt";
        return "tab";
    }

    ContextFormat output_format(const std::string& source) const {
        const std::string f = out_format.empty() ? source : out_format;
        return f == "cxt" ? ContextFormat::cxt : ContextFormat::tab;
    }

    // Loaded context and the format it came in.
    std::pair<BinaryContext, std::string> load() const {
        const std::string text = read_input();
        const std::string fmt = detect_format(text);
        if (fmt == "csv") {
            BinningSpec spec{binning == "freq" ? Binning::equal_frequency : Binning::equal_width, bins};
            return {discretize(parse_csv(text, label_column), spec), "tab"};
        }
        return {parse_context(text, fmt == "cxt" ? ContextFormat::cxt : ContextFormat::tab), fmt};
    }

    MineOptions mine_options() const { return {parse_strategy(strategy), threads}; }

    void emit_text(const std::string& text) const {
        if (color.empty()) {
            out << text;
            return;
        }
        const auto targets = split_commas(color);
        out << colorize(text, std::set<std::string>(targets.begin(), targets.end()));
    }

    void cmd_stats() const {
        const auto [ctx, fmt] = load();
        const auto s = stats(ctx);
        if (format == "json") {
            nlohmann::ordered_json supports = nlohmann::ordered_json::object();
            for (AttrId a = 0; a < ctx.attribute_count(); ++a) supports[ctx.attribute_label(a)] = s.attribute_supports[a];
            nlohmann::ordered_json doc = {{"objects", s.objects},
                                  {"attributes", s.attributes},
                                  {"ones", s.ones},
                                  {"density", s.density},
                                  {"attribute_supports", supports}};
            out << doc.dump() << "\n";
            return;
        }
        char density[32];
        std::snprintf(density, sizeof density, "%.4f", s.density);
        out << "objects: " << s.objects << "\nattributes: " << s.attributes << "\nones: " << s.ones
            << "\ndensity: " << density << "\n";
        for (AttrId a = 0; a < ctx.attribute_count(); ++a)
            out << "support " << ctx.attribute_label(a) << ": " << s.attribute_supports[a] << "\n";
    }

    void cmd_transform(const std::function<BinaryContext(const BinaryContext&)>& f) const {
        const auto [ctx, fmt] = load();
        out << write_context(f(ctx), output_format(fmt));
    }

    void cmd_project() const {
        Projection p;
        if (!objects.empty()) p.keep_objects = split_commas(objects);
        if (!attributes.empty()) p.keep_attributes = split_commas(attributes);
        p.min_column_support = min_col_support;
        cmd_transform([&](const BinaryContext& c) { return project(c, p); });
    }

    void cmd_convert() const {
        const auto [ctx, fmt] = load();
        out << write_context(ctx, to == "cxt" ? ContextFormat::cxt : ContextFormat::tab);
    }

    void cmd_discretize() const {
        const std::string text = read_input();
        BinningSpec spec{binning == "freq" ? Binning::equal_frequency : Binning::equal_width, bins};
        const auto ctx = discretize(parse_csv(text, label_column), spec);
        out << write_context(ctx, output_format("tab"));
    }

    void cmd_mine() const {
        const auto [ctx, fmt] = load();
        const auto threshold = SupportThreshold::parse(minsup);
        const auto opts = mine_options();
        const auto& names = ctx.attribute_labels();
        if (classes) {
            emit_text(render_equivalence_classes(mine_equivalence_classes(ctx, threshold, opts), names));
            return;
        }
        std::vector<MinedSet> sets;
        if (set == "fi")
            sets = mine_frequent(ctx, threshold, opts);
        else if (set == "fci")
            sets = mine_closed(ctx, threshold, opts);
        else if (set == "fg")
            sets = mine_generators(ctx, threshold, opts);
        else
            sets = mine_minimal_rare(ctx, threshold, opts);
        if (format == "json")
            out << render_sets_jsonl(sets, names);
        else
            emit_text(render_sets_text(sets, names));
    }

    void cmd_rules() const {
        const auto [ctx, fmt] = load();
        const auto opts = mine_options();
        std::vector<AssociationRule> rules;
        if (basis == "dg") {
            rules = duquenne_guigues(ctx, ImplicationOptions{max_attributes});
        } else {
            const auto threshold = SupportThreshold::parse(minsup);
            if (basis == "all")
                rules = all_rules(ctx, threshold, minconf, opts);
            else if (basis == "generic")
                rules = generic_basis(ctx, threshold, opts);
            else if (basis == "mnr" || basis == "rmnr")
                rules = mnr_rules(ctx, threshold, minconf, basis == "rmnr", opts);
            else if (basis == "closed")
                rules = closed_rules(ctx, threshold, minconf, opts);
            else
                rules = rare_rules(ctx, threshold, opts);
        }
        print_rules(rules, ctx.attribute_labels());
    }

    void print_rules(const std::vector<AssociationRule>& rules, const Labels& labels) const {
        if (format == "json")
            out << render_rules_jsonl(rules, labels);
        else
            emit_text(render_rules_text(rules, labels));
    }

    void cmd_lattice() const {
        const auto [ctx, fmt] = load();
        const auto lattice = build_lattice(ctx, LatticeOptions{max_attributes});
        if (dot)
            out << export_dot(lattice, labels == "reduced" ? LabelMode::reduced : LabelMode::full);
        else if (format == "json")
            out << export_json(lattice);
        else
            out << export_text(lattice);
    }

    RuleTable load_rules() const {
        const std::string text = read_input();
        if (context_path.empty()) return parse_rules_jsonl(text);
        const std::string ctext = read_file(context_path);
        const auto fmt = ends_with(context_path, ".cxt") ? ContextFormat::cxt : ContextFormat::tab;
        const auto ctx = parse_context(ctext, fmt);
        return parse_rules_jsonl(text, &ctx.attribute_labels());
    }

    static Itemset resolve_labels(const std::string& list, const Labels& vocabulary) {
        std::vector<AttrId> ids;
        for (const auto& name : split_commas(list)) {
            auto it = std::find(vocabulary.begin(), vocabulary.end(), name);
            ids.push_back(static_cast<AttrId>(it - vocabulary.begin()));
        }
        return Itemset(std::move(ids));
    }

    void cmd_filter() const {
        auto table = load_rules();
        FilterSpec spec;
        if (!premise_len.empty()) spec.premise_len = parse_range(premise_len);
        if (!consequent_len.empty()) spec.consequent_len = parse_range(consequent_len);
        auto vocab = table.attributes;
        // Names no rule mentions get fresh ids: they match nothing, and a
        // name in both lists is still reported as contradictory.
        for (const auto& list : {contain, exclude})
            for (const auto& name : split_commas(list))
                if (std::find(vocab.begin(), vocab.end(), name) == vocab.end()) vocab.push_back(name);
        spec.must_contain = resolve_labels(contain, vocab);
        spec.must_not_contain = resolve_labels(exclude, vocab);
        spec.side = side == "premise" ? RuleSide::premise : side == "consequent" ? RuleSide::consequent : RuleSide::either;
        print_rules(filter_rules(table.rules, spec), table.attributes);
    }

    void cmd_topk() const {
        auto table = load_rules();
        print_rules(top_k(table.rules, parse_measure(by), top), table.attributes);
    }

    void cmd_color() const {
        const auto targets = split_commas(color);
        out << colorize(read_input(), std::set<std::string>(targets.begin(), targets.end()));
    }

    void cmd_gen() const {
        const auto ctx = random_context(GenSpec{rows, cols, density, seed});
        out << write_context(ctx, out_format == "cxt" ? ContextFormat::cxt : ContextFormat::tab);
    }
};

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Invocation inv(in, out);
    std::function<void()> action;

    CLI::App app{"Itemset, association rule and concept lattice mining over binary contexts", "latmine"};
    app.require_subcommand(1);

    const std::vector<std::string> context_formats{"tab", "cxt", "csv"};
    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", inv.input, "input file, or - for standard input")->capture_default_str();
        cmd->add_option("--in-format", inv.in_format, "override extension-based format detection")
            ->check(CLI::IsMember(context_formats));
        cmd->add_option("--bins", inv.bins, "bins per numeric column for CSV input")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        cmd->add_option("--binning", inv.binning, "CSV binning: equal width or equal frequency")
            ->check(CLI::IsMember({"width", "freq"}))
            ->capture_default_str();
        cmd->add_flag("--label-column", inv.label_column, "first CSV column holds object labels");
    };
    auto add_out_format = [&](CLI::App* cmd) {
        cmd->add_option("--out-format", inv.out_format, "context output format (default: input format)")
            ->check(CLI::IsMember({"tab", "cxt"}));
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", inv.format, "result format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };
    auto add_mining = [&](CLI::App* cmd) {
        cmd->add_option("--minsup", inv.minsup, "minimum support: count or percentage (e.g. 5%)")->capture_default_str();
        cmd->add_option("--strategy", inv.strategy, "search strategy")
            ->check(CLI::IsMember({"levelwise", "dfs", "hybrid"}))
            ->capture_default_str();
        cmd->add_option("--threads", inv.threads, "worker threads, 0 = all cores")->capture_default_str();
        cmd->add_option("--color", inv.color, "highlight these attributes (comma-separated) in text output");
    };

    auto* stats_cmd = app.add_subcommand("stats", "context dimensions, density and attribute supports");
    add_input(stats_cmd);
    add_format(stats_cmd);
    stats_cmd->callback([&] { action = [&] { inv.cmd_stats(); }; });

    auto* pre = app.add_subcommand("pre", "pre-processing of contexts and numeric tables");
    pre->require_subcommand(1);
    auto* transpose_cmd = pre->add_subcommand("transpose", "swap objects and attributes");
    add_input(transpose_cmd);
    add_out_format(transpose_cmd);
    transpose_cmd->callback([&] { action = [&] { inv.cmd_transform([](const BinaryContext& c) { return transpose(c); }); }; });
    auto* complement_cmd = pre->add_subcommand("complement", "negate every cell");
    add_input(complement_cmd);
    add_out_format(complement_cmd);
    complement_cmd->callback([&] { action = [&] { inv.cmd_transform([](const BinaryContext& c) { return complement(c); }); }; });
    auto* project_cmd = pre->add_subcommand("project", "restrict to objects/attributes");
    add_input(project_cmd);
    add_out_format(project_cmd);
    project_cmd->add_option("--objects", inv.objects, "objects to keep (comma-separated)");
    project_cmd->add_option("--attributes", inv.attributes, "attributes to keep (comma-separated)");
    project_cmd->add_option("--min-col-support", inv.min_col_support, "drop attributes below this support");
    project_cmd->callback([&] { action = [&] { inv.cmd_project(); }; });
    auto* convert_cmd = pre->add_subcommand("convert", "re-encode a context");
    add_input(convert_cmd);
    convert_cmd->add_option("--to", inv.to, "target format")->required()->check(CLI::IsMember({"tab", "cxt"}));
    convert_cmd->callback([&] { action = [&] { inv.cmd_convert(); }; });
    auto* discretize_cmd = pre->add_subcommand("discretize", "bin a numeric CSV table into a context");
    discretize_cmd->add_option("input", inv.input, "CSV file, or - for standard input")->capture_default_str();
    discretize_cmd->add_option("--bins", inv.bins, "bins per column")->check(CLI::PositiveNumber)->capture_default_str();
    discretize_cmd->add_option("--binning", inv.binning, "equal width or equal frequency")
        ->check(CLI::IsMember({"width", "freq"}))
        ->capture_default_str();
    discretize_cmd->add_flag("--label-column", inv.label_column, "first column holds object labels");
    add_out_format(discretize_cmd);
    discretize_cmd->callback([&] { action = [&] { inv.cmd_discretize(); }; });

    auto* mine_cmd = app.add_subcommand("mine", "extract itemset families");
    add_input(mine_cmd);
    add_format(mine_cmd);
    add_mining(mine_cmd);
    mine_cmd->add_option("--set", inv.set, "fi: frequent, fci: closed, fg: generators, mri: minimal rare")
        ->check(CLI::IsMember({"fi", "fci", "fg", "mri"}))
        ->capture_default_str();
    mine_cmd->add_flag("--classes", inv.classes, "print equivalence classes instead of a set family");
    mine_cmd->callback([&] { action = [&] { inv.cmd_mine(); }; });

    auto* rules_cmd = app.add_subcommand("rules", "generate association rules or implication bases");
    add_input(rules_cmd);
    add_format(rules_cmd);
    add_mining(rules_cmd);
    rules_cmd->add_option("--minconf", inv.minconf, "minimum confidence in (0,1]")->capture_default_str();
    rules_cmd->add_option("--basis", inv.basis, "rule family")
        ->check(CLI::IsMember({"all", "generic", "mnr", "rmnr", "closed", "rare", "dg"}))
        ->capture_default_str();
    rules_cmd->add_option("--max-attributes", inv.max_attributes, "attribute limit for the dg basis")
        ->capture_default_str();
    rules_cmd->callback([&] { action = [&] { inv.cmd_rules(); }; });

    auto* lattice_cmd = app.add_subcommand("lattice", "build the concept lattice");
    add_input(lattice_cmd);
    add_format(lattice_cmd);
    lattice_cmd->add_flag("--dot", inv.dot, "emit Graphviz DOT");
    lattice_cmd->add_option("--labels", inv.labels, "DOT node labels")
        ->check(CLI::IsMember({"full", "reduced"}))
        ->capture_default_str();
    lattice_cmd->add_option("--max-attributes", inv.max_attributes, "attribute limit")->capture_default_str();
    lattice_cmd->callback([&] { action = [&] { inv.cmd_lattice(); }; });

    auto* post = app.add_subcommand("post", "post-processing of extracted rules");
    post->require_subcommand(1);
    auto add_rules_input = [&](CLI::App* cmd) {
        cmd->add_option("input", inv.input, "rule JSON-lines file, or - for standard input")->capture_default_str();
        cmd->add_option("--context", inv.context_path, "context whose attribute order the rules use");
        add_format(cmd);
    };
    auto* filter_cmd = post->add_subcommand("filter", "keep rules matching syntactic and length clauses");
    add_rules_input(filter_cmd);
    filter_cmd->add_option("--premise-len", inv.premise_len, "premise length range MIN:MAX");
    filter_cmd->add_option("--consequent-len", inv.consequent_len, "consequent length range MIN:MAX");
    filter_cmd->add_option("--contain", inv.contain, "attributes that must appear (comma-separated)");
    filter_cmd->add_option("--exclude", inv.exclude, "attributes that must not appear (comma-separated)");
    filter_cmd->add_option("--side", inv.side, "where --contain/--exclude look")
        ->check(CLI::IsMember({"premise", "consequent", "either"}))
        ->capture_default_str();
    filter_cmd->add_option("--color", inv.color, "highlight these attributes in text output");
    filter_cmd->callback([&] { action = [&] { inv.cmd_filter(); }; });
    auto* topk_cmd = post->add_subcommand("topk", "best k rules by a measure");
    add_rules_input(topk_cmd);
    topk_cmd->add_option("--top", inv.top, "k")->capture_default_str();
    topk_cmd->add_option("--by", inv.by, "ranking measure")
        ->check(CLI::IsMember({"support", "confidence", "lift", "conviction"}))
        ->capture_default_str();
    topk_cmd->add_option("--color", inv.color, "highlight these attributes in text output");
    topk_cmd->callback([&] { action = [&] { inv.cmd_topk(); }; });
    auto* color_cmd = post->add_subcommand("color", "highlight attributes in rendered text");
    color_cmd->add_option("input", inv.input, "text file, or - for standard input")->capture_default_str();
    color_cmd->add_option("--color", inv.color, "attributes to highlight (comma-separated)")->required();
    color_cmd->callback([&] { action = [&] { inv.cmd_color(); }; });

    auto* gen_cmd = app.add_subcommand("gen", "generate a random context");
    gen_cmd->add_option("--rows", inv.rows, "objects")->required();
    gen_cmd->add_option("--cols", inv.cols, "attributes")->required();
    gen_cmd->add_option("--density", inv.density, "probability of each cell")->capture_default_str();
    gen_cmd->add_option("--seed", inv.seed, "generator seed")->capture_default_str();
    add_out_format(gen_cmd);
    gen_cmd->callback([&] { action = [&] { inv.cmd_gen(); }; });

    std::vector<std::string> argv_storage{"latmine"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
        return usage_error;
    }

    try {
        action();
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return input_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return constraint_error;
    }
    out.flush();
    return ok;
}

} // namespace latmine::cli

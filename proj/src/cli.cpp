#include "prefab/cli.hpp"

#include <fstream>
#include <limits>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "prefab/partitions.hpp"
#include "prefab/stats.hpp"

namespace prefab::cli {

namespace {

Params parse_pair(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw InvalidArgument("expected r:s, got '" + text + "'");
    try {
        std::size_t used_r = 0;
        std::size_t used_s = 0;
        const int r = std::stoi(text.substr(0, colon), &used_r);
        const int s = std::stoi(text.substr(colon + 1), &used_s);
        if (used_r != colon || used_s != text.size() - colon - 1)
            throw InvalidArgument("expected r:s, got '" + text + "'");
        return {r, s};
    } catch (const std::logic_error&) {
        throw InvalidArgument("expected r:s, got '" + text + "'");
    }
}

std::string default_format(const std::string& command)
{
    if (command == "stats")
        return "csv";
    if (command == "enumerate")
        return "json";
    return "text";
}

std::string one_line(std::string message)
{
    for (char& c : message)
        if (c == '\n' || c == '\r')
            c = ' ';
    while (!message.empty() && message.back() == ' ')
        message.pop_back();
    return message;
}

// Raw values collected by CLI11 before validation.
struct RawArgs {
    std::string spec;
    int max_n = 100;
    int n = -1;
    std::vector<int> ks;
    std::string kind;
    std::string theorem;
    bool all = false;
    std::vector<int> b_range{1, 2, 3};
    std::vector<std::string> rs_range{"1:1", "2:1", "1:2"};
    std::string mode = "fast";
    std::string format;
    bool json = false;
    std::string output;
    std::string timing;
    int oracle_cap = default_oracle_cap;
    bool force = false;
    bool count_only = false;
    bool seedless = false;
    bool print_config = false;
};

void add_common(CLI::App* cmd, RawArgs& raw)
{
    cmd->add_option("--format", raw.format, "Output format: json, csv or text (default depends on the command)")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--output", raw.output, "Write primary output to this file instead of stdout");
    cmd->add_option("--oracle-cap", raw.oracle_cap, "Largest n the enumeration oracle accepts")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    cmd->add_flag("--force", raw.force, "Lift the oracle cap");
    cmd->add_flag("--seedless", raw.seedless, "Deterministic output (always on; nothing is randomized)");
    cmd->add_flag("--print-config", raw.print_config, "Print the parsed configuration as JSON and exit");
}

void write_output(const RunConfig& config, std::ostream& out, const std::string& text)
{
    if (config.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(config.output, std::ios::binary);
    if (!file)
        throw InvalidArgument("cannot open output file '" + config.output + "'");
    file << text;
}

int effective_cap(const RunConfig& config)
{
    return config.force ? std::numeric_limits<int>::max() : config.oracle_cap;
}

const SpecSelector& require_spec(const RunConfig& config)
{
    if (!config.spec)
        throw InvalidArgument(config.command + " needs --spec");
    return *config.spec;
}

int cmd_count(const RunConfig& config, std::ostream& out)
{
    const auto& sel = require_spec(config);
    if (config.max_n < 0)
        throw InvalidArgument("--max-n must be >= 0");
    const CoeffSeries series = expand(sel.build(config.max_n), config.max_n);
    const std::string format = config.format.empty() ? default_format(config.command) : config.format;
    std::ostringstream text;
    if (format == "json") {
        text << to_json(series).dump(2) << '\n';
    } else {
        if (format == "csv")
            text << "n,value\n";
        for (int n = 0; n <= series.truncation(); ++n)
            text << n << (format == "csv" ? "," : " ") << series[n].str() << '\n';
    }
    write_output(config, out, text.str());
    return exit_ok;
}

int cmd_stats(const RunConfig& config, std::ostream& out)
{
    const auto& sel = require_spec(config);
    if (!config.kind)
        throw InvalidArgument("stats needs --kind");
    const StatKind kind = *config.kind;
    if (!compatible(kind, sel))
        throw InvalidArgument(std::string(tag(kind)) + " does not apply to " + sel.to_string() +
                              "; valid pairing: " + valid_pairing(kind));
    if (config.max_n < 0)
        throw InvalidArgument("--max-n must be >= 0");

    std::vector<int> ks = config.ks;
    if (ks.empty())
        for (int k = 1; k <= std::max(config.max_n, 1); ++k)
            ks.push_back(k);
    const CoeffSeries series = expand(sel.build(config.max_n), config.max_n);
    const StatTable table = build_table(kind, sel, series, ks, config.max_n);

    const std::string format = config.format.empty() ? default_format(config.command) : config.format;
    std::ostringstream text;
    if (format == "json") {
        text << to_json(table).dump(2) << '\n';
    } else if (format == "csv") {
        text << to_csv(table);
    } else {
        text << tag(kind) << " for " << table.spec_label << '\n';
        for (const auto& [key, value] : table.values)
            text << "k=" << key.first << " n=" << key.second << " " << value.str() << '\n';
    }
    write_output(config, out, text.str());
    return exit_ok;
}

int cmd_enumerate(const RunConfig& config, std::ostream& out)
{
    const auto& sel = require_spec(config);
    if (!config.n)
        throw InvalidArgument("enumerate needs --n");
    const int n = *config.n;
    if (n < 0)
        throw InvalidArgument("--n must be >= 0");
    check_cap(n, effective_cap(config));

    const FactorSpec spec = sel.build(n);
    const std::string format = config.format.empty() ? default_format(config.command) : config.format;
    std::ostringstream text;
    std::uint64_t count = 0;
    for_each_partition(n, spec, [&](const ColoredPartition& pi) {
        ++count;
        if (config.count_only)
            return;
        if (format == "text")
            text << to_text(pi, spec) << '\n';
        else
            text << to_json(pi).dump() << '\n';
    });
    if (config.count_only)
        text << count << '\n';
    write_output(config, out, text.str());
    return exit_ok;
}

int cmd_verify(const RunConfig& config, std::ostream& out)
{
    if (config.all == config.theorem.has_value())
        throw InvalidArgument("verify needs exactly one of --theorem or --all");
    if (config.max_n < 1)
        throw InvalidArgument("empty range: --max-n must be >= 1");

    VerifyOptions options;
    options.mode = config.mode;
    options.oracle_cap = effective_cap(config);
    if (options.mode == VerifyMode::oracle)
        check_cap(config.max_n, options.oracle_cap);

    std::vector<IdentityReport> reports;
    if (config.all) {
        reports = verify_all(config.max_n, config.b_range, config.rs_range, options);
    } else {
        const auto params = default_params(*config.theorem, config.b_range, config.rs_range);
        reports.push_back(verify(*config.theorem, params, config.max_n, options));
    }

    const std::string format = config.format.empty() ? default_format(config.command) : config.format;
    std::ostringstream text;
    if (format == "json") {
        nlohmann::json array = nlohmann::json::array();
        for (const auto& r : reports)
            array.push_back(to_json(r));
        text << array.dump(2) << '\n';
    } else {
        for (const auto& r : reports)
            text << summary_line(r) << '\n';
    }
    write_output(config, out, text.str());

    if (!config.timing.empty()) {
        nlohmann::json timing = nlohmann::json::array();
        for (const auto& r : reports)
            timing.push_back({{"theorem", tag(r.theorem)}, {"elapsed_seconds", r.elapsed.count()}});
        std::ofstream sidecar(config.timing);
        if (!sidecar)
            throw InvalidArgument("cannot open timing file '" + config.timing + "'");
        sidecar << timing.dump(2) << '\n';
    }

    const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass(); });
    return all_pass ? exit_ok : exit_verification_failed;
}

} // namespace

nlohmann::json to_json(const RunConfig& c)
{
    nlohmann::json j = {
        {"command", c.command},
        {"max_n", c.max_n},
        {"ks", c.ks},
        {"all", c.all},
        {"b_range", c.b_range},
        {"rs_range", c.rs_range},
        {"mode", to_string(c.mode)},
        {"format", c.format},
        {"output", c.output},
        {"timing", c.timing},
        {"oracle_cap", c.oracle_cap},
        {"force", c.force},
        {"count_only", c.count_only},
    };
    j["spec"] = c.spec ? nlohmann::json(c.spec->to_string()) : nlohmann::json(nullptr);
    j["n"] = c.n ? nlohmann::json(*c.n) : nlohmann::json(nullptr);
    j["kind"] = c.kind ? nlohmann::json(tag(*c.kind)) : nlohmann::json(nullptr);
    j["theorem"] = c.theorem ? nlohmann::json(tag(*c.theorem)) : nlohmann::json(nullptr);
    return j;
}

RunConfig config_from_json(const nlohmann::json& j)
{
    RunConfig c;
    c.command = j.at("command").get<std::string>();
    if (!j.at("spec").is_null())
        c.spec = SpecSelector::parse(j.at("spec").get<std::string>());
    c.max_n = j.at("max_n").get<int>();
    if (!j.at("n").is_null())
        c.n = j.at("n").get<int>();
    c.ks = j.at("ks").get<std::vector<int>>();
    if (!j.at("kind").is_null()) {
        c.kind = parse_stat_kind(j.at("kind").get<std::string>());
        if (!c.kind)
            throw InvalidArgument("unknown stat kind in config");
    }
    if (!j.at("theorem").is_null()) {
        c.theorem = parse_theorem(j.at("theorem").get<std::string>());
        if (!c.theorem)
            throw InvalidArgument("unknown theorem in config");
    }
    c.all = j.at("all").get<bool>();
    c.b_range = j.at("b_range").get<std::vector<int>>();
    c.rs_range = j.at("rs_range").get<std::vector<Params>>();
    const auto mode = parse_mode(j.at("mode").get<std::string>());
    if (!mode)
        throw InvalidArgument("unknown mode in config");
    c.mode = *mode;
    c.format = j.at("format").get<std::string>();
    c.output = j.at("output").get<std::string>();
    c.timing = j.at("timing").get<std::string>();
    c.oracle_cap = j.at("oracle_cap").get<int>();
    c.force = j.at("force").get<bool>();
    c.count_only = j.at("count_only").get<bool>();
    return c;
}

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out)
{
    RawArgs raw;
    CLI::App app{"Colored-partition counting sequences, statistics and identity checks", "prefab"};
    app.require_subcommand(1);

    auto* count = app.add_subcommand("count", "Print the coefficients h(0..N) of a generating product");
    count->add_option("--spec", raw.spec, "Product selector: uniform:b, kcolors, odd:b, distinct:b, "
                                          "overpartition:r,s, oddoverlined:r,s")
        ->required();
    count->add_option("--max-n", raw.max_n, "Truncation order N")->capture_default_str();
    add_common(count, raw);

    auto* stats = app.add_subcommand("stats", "Tabulate a statistic over (k, n)");
    stats->add_option("--kind", raw.kind,
                      "Statistic: F, G, H, Fodd, Godd, Fdistinct, Fkcolors, Gkcolors, Obar, Ooverlined, Tbar, "
                      "Fbar1, Gbar1, Gbar3, Fgeneral (or the upper-case tag)")
        ->required();
    stats->add_option("--spec", raw.spec, "Product selector")->required();
    stats->add_option("--k,--m", raw.ks, "k (or m) values, comma separated (default: 1..max-n)")->delimiter(',');
    stats->add_option("--max-n", raw.max_n, "Largest n")->capture_default_str();
    add_common(stats, raw);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Stream every colored partition of n");
    enumerate_cmd->add_option("--spec", raw.spec, "Product selector")->required();
    enumerate_cmd->add_option("--n", raw.n, "Weight n")->required();
    enumerate_cmd->add_flag("--count-only", raw.count_only, "Print only the number of partitions");
    add_common(enumerate_cmd, raw);

    auto* verify_cmd = app.add_subcommand("verify", "Check identities over a range of n");
    verify_cmd->add_option("--theorem", raw.theorem,
                           "sef-classic, sef-bcolored, andrews-merca, odd-sum, distinct-diff, kcolors, "
                           "overpartition, overline13, euler");
    verify_cmd->add_flag("--all", raw.all, "Check every theorem");
    verify_cmd->add_option("--max-n", raw.max_n, "Largest n")->capture_default_str();
    verify_cmd->add_option("--b", raw.b_range, "Color counts b")->delimiter(',')->capture_default_str();
    verify_cmd->add_option("--rs", raw.rs_range, "(r,s) pairs as r:s")->delimiter(',')->capture_default_str();
    verify_cmd->add_option("--mode", raw.mode, "fast, oracle or both")
        ->capture_default_str()
        ->check(CLI::IsMember({"fast", "oracle", "both"}));
    verify_cmd->add_flag("--json", raw.json, "Same as --format json");
    verify_cmd->add_option("--timing", raw.timing, "Write elapsed times to this JSON sidecar");
    add_common(verify_cmd, raw);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, out);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw InvalidArgument(e.what());
    }

    RunConfig c;
    c.command = app.get_subcommands().front()->get_name();
    if (!raw.spec.empty())
        c.spec = SpecSelector::parse(raw.spec);
    c.max_n = raw.max_n;
    if (raw.n >= 0 || enumerate_cmd->count("--n") > 0)
        c.n = raw.n;
    c.ks = raw.ks;
    if (!raw.kind.empty()) {
        c.kind = parse_stat_kind(raw.kind);
        if (!c.kind)
            throw InvalidArgument("unknown statistic '" + raw.kind + "'");
    }
    if (!raw.theorem.empty()) {
        c.theorem = parse_theorem(raw.theorem);
        if (!c.theorem)
            throw InvalidArgument("unknown theorem '" + raw.theorem + "'");
    }
    c.all = raw.all;
    c.b_range = raw.b_range;
    c.rs_range.clear();
    for (const auto& pair : raw.rs_range)
        c.rs_range.push_back(parse_pair(pair));
    c.mode = *parse_mode(raw.mode);
    c.format = raw.json ? "json" : raw.format;
    c.output = raw.output;
    c.timing = raw.timing;
    c.oracle_cap = raw.oracle_cap;
    c.force = raw.force;
    c.count_only = raw.count_only;

    if (raw.print_config) {
        out << to_json(c).dump(2) << '\n';
        return std::nullopt;
    }
    return c;
}

int execute(const RunConfig& config, std::ostream& out)
{
    if (config.command == "count")
        return cmd_count(config, out);
    if (config.command == "stats")
        return cmd_stats(config, out);
    if (config.command == "enumerate")
        return cmd_enumerate(config, out);
    if (config.command == "verify")
        return cmd_verify(config, out);
    throw InvalidArgument("unknown command '" + config.command + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    try {
        const auto config = parse_args(args, out);
        if (!config)
            return exit_ok;
        return execute(*config, out);
    } catch (const CapExceeded& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return exit_cap;
    } catch (const Error& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return exit_usage;
    }
}

} // namespace prefab::cli

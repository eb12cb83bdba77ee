#include "semiflow/cli/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace semiflow::cli {

namespace {

using nlohmann::json;

void require_object(const json& j, const std::string& where)
{
    if (!j.is_object())
        throw ConfigError(where + " must be a JSON object");
}

void reject_unknown(const json& j, const std::string& where, const std::set<std::string>& allowed)
{
    for (const auto& [key, _] : j.items())
        if (!allowed.contains(key))
            throw ConfigError("unknown key '" + key + "' in " + where);
}

double number(const json& j, const std::string& key, const std::string& where)
{
    const auto& v = j.at(key);
    if (!v.is_number())
        throw ConfigError(where + "." + key + " must be a number");
    return v.get<double>();
}

std::size_t count(const json& j, const std::string& key, const std::string& where)
{
    const auto& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw ConfigError(where + "." + key + " must be a non-negative integer");
    return v.get<std::size_t>();
}

std::string text(const json& j, const std::string& key, const std::string& where)
{
    const auto& v = j.at(key);
    if (!v.is_string())
        throw ConfigError(where + "." + key + " must be a string");
    return v.get<std::string>();
}

void require_key(const json& j, const std::string& key, const std::string& where)
{
    if (!j.contains(key))
        throw ConfigError("missing key '" + key + "' in " + where);
}

} // namespace

SimulationConfig parse_run_config(const json& doc)
{
    require_object(doc, "config");
    reject_unknown(doc, "config", {"grid", "law", "time", "solver", "ic"});
    for (const char* key : {"grid", "time", "solver", "ic"})
        require_key(doc, key, "config");

    SimulationConfig config;
    try {
        const auto& grid = doc.at("grid");
        require_object(grid, "grid");
        reject_unknown(grid, "grid", {"n", "length"});
        require_key(grid, "n", "grid");
        const std::size_t n = count(grid, "n", "grid");
        const double length = grid.contains("length") ? number(grid, "length", "grid") : 2.0 * std::numbers::pi;
        config.grid = Grid(n, length);

        if (doc.contains("law")) {
            const auto& law = doc.at("law");
            require_object(law, "law");
            reject_unknown(law, "law", {"kind", "kappa", "gamma"});
            const std::string kind = law.contains("kind") ? text(law, "kind", "law") : "polytropic";
            if (kind != "polytropic")
                throw ConfigError("unsupported law kind '" + kind + "'");
            const double kappa = law.contains("kappa") ? number(law, "kappa", "law") : 1.0;
            const double gamma = law.contains("gamma") ? number(law, "gamma", "law") : 1.4;
            config.law = make_polytropic(kappa, gamma);
        }

        const auto& time = doc.at("time");
        require_object(time, "time");
        reject_unknown(time, "time", {"dt", "t_end", "output_stride"});
        require_key(time, "dt", "time");
        require_key(time, "t_end", "time");
        config.dt = number(time, "dt", "time");
        config.t_end = number(time, "t_end", "time");
        if (time.contains("output_stride"))
            config.output_stride = count(time, "output_stride", "time");

        config.solver = parse_solver(text(doc, "solver", "config"));

        const auto& ic = doc.at("ic");
        require_object(ic, "ic");
        reject_unknown(ic, "ic", {"name", "params"});
        require_key(ic, "name", "ic");
        config.ic_name = text(ic, "name", "ic");
        if (ic.contains("params")) {
            const auto& params = ic.at("params");
            require_object(params, "ic.params");
            for (const auto& [key, value] : params.items()) {
                if (!value.is_number())
                    throw ConfigError("ic.params." + key + " must be a number");
                config.ic_params[key] = value.get<double>();
            }
        }

        validate(config);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
    return config;
}

SimulationConfig parse_run_config(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    return parse_run_config(doc);
}

SimulationConfig load_run_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path.string() + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_run_config(buffer.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

json to_json(const SimulationConfig& config)
{
    json doc;
    doc["grid"] = {{"n", config.grid.size()}, {"length", config.grid.length()}};
    if (const auto* poly = dynamic_cast<const PolytropicLaw*>(config.law.get()))
        doc["law"] = {{"kind", "polytropic"}, {"kappa", poly->kappa()}, {"gamma", poly->gamma()}};
    doc["time"] = {{"dt", config.dt}, {"t_end", config.t_end}, {"output_stride", config.output_stride}};
    doc["solver"] = to_string(config.solver);
    doc["ic"] = {{"name", config.ic_name}, {"params", config.ic_params}};
    return doc;
}

} // namespace semiflow::cli

#include "params.hpp"

#include <algorithm>

#ifdef SAVI_VENDORED_JSON
#include <json.hpp>
#else
#include <nlohmann/json.hpp>
#endif

#include "savi/core.hpp"
#include "savi_cli/io.hpp"

namespace savi::cli {

namespace {

using nlohmann::json;

std::string json_key(std::string name) {
  std::replace(name.begin(), name.end(), '-', '_');
  return name;
}

[[noreturn]] void type_error(const std::string& key, const char* expected) {
  throw ConfigError("config field '" + key + "': expected " + expected);
}

double as_double(const json& v, const std::string& key) {
  if (!v.is_number()) type_error(key, "a number");
  return v.get<double>();
}

std::int64_t as_integer(const json& v, const std::string& key) {
  if (!v.is_number_integer()) type_error(key, "an integer");
  return v.get<std::int64_t>();
}

std::uint64_t as_unsigned(const json& v, const std::string& key) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
  }
  type_error(key, "a nonnegative integer");
}

}  // namespace

ParamSet::ParamSet(CLI::App* app) : app_(app) {
  app_->add_option("--config", config_path_,
                   "JSON config file (schema_version 1); flags override its fields");
}

CLI::Option* ParamSet::add_flag(const std::string& name, bool& target, const std::string& help) {
  CLI::Option* opt = app_->add_flag("--" + name, target, help);
  params_.push_back({name, &target, opt});
  return opt;
}

bool ParamSet::given(const std::string& name) const {
  for (const Param& p : params_) {
    if (p.name == name) {
      return p.option->count() > 0 ||
             std::find(from_config_.begin(), from_config_.end(), name) != from_config_.end();
    }
  }
  return false;
}

void ParamSet::apply_config() const {
  if (config_path_.empty()) return;
  const std::string text = read_file(config_path_);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("config " + config_path_ + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config " + config_path_ + ": top level must be an object");
  if (!doc.contains("schema_version")) {
    throw ConfigError("config field 'schema_version' is required");
  }
  if (!doc["schema_version"].is_number_integer() || doc["schema_version"].get<int>() != kSchemaVersion) {
    throw ConfigError("config field 'schema_version': only version " +
                      std::to_string(kSchemaVersion) + " is supported");
  }

  for (const auto& [key, value] : doc.items()) {
    if (key == "schema_version") continue;
    const auto it = std::find_if(params_.begin(), params_.end(),
                                 [&](const Param& p) { return json_key(p.name) == key; });
    if (it == params_.end()) throw ConfigError("config field '" + key + "': unknown field");
    if (it->option->count() > 0) continue;  // the flag wins
    from_config_.push_back(it->name);

    std::visit(
        [&](auto* target) {
          using T = std::remove_pointer_t<decltype(target)>;
          if constexpr (std::is_same_v<T, double>) {
            *target = as_double(value, key);
          } else if constexpr (std::is_same_v<T, int>) {
            *target = static_cast<int>(as_integer(value, key));
          } else if constexpr (std::is_same_v<T, std::uint64_t>) {
            *target = static_cast<T>(as_unsigned(value, key));
          } else if constexpr (std::is_same_v<T, std::string>) {
            if (!value.is_string()) type_error(key, "a string");
            *target = value.get<std::string>();
          } else if constexpr (std::is_same_v<T, bool>) {
            if (!value.is_boolean()) type_error(key, "a boolean");
            *target = value.get<bool>();
          } else if constexpr (std::is_same_v<T, std::vector<double>>) {
            if (!value.is_array()) type_error(key, "an array of numbers");
            target->clear();
            for (const json& item : value) target->push_back(as_double(item, key));
          } else {
            if (!value.is_array()) type_error(key, "an array of strings");
            target->clear();
            for (const json& item : value) {
              if (!item.is_string()) type_error(key, "an array of strings");
              target->push_back(item.get<std::string>());
            }
          }
        },
        it->target);
  }
}

}  // namespace savi::cli

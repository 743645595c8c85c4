#pragma once

// Binds one record of parameters to both CLI11 flags and JSON config keys.
// A JSON config must carry "schema_version": 1; keys are the flag names
// with '-' replaced by '_'. Flags given on the command line win.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

namespace savi::cli {

inline constexpr int kSchemaVersion = 1;

class ParamSet {
 public:
  explicit ParamSet(CLI::App* app);

  template <class T>
  CLI::Option* add(const std::string& name, T& target, const std::string& help) {
    CLI::Option* opt = app_->add_option("--" + name, target, help)->capture_default_str();
    params_.push_back({name, &target, opt});
    return opt;
  }
  CLI::Option* add_flag(const std::string& name, bool& target, const std::string& help);

  // Reads --config (if given) and fills every parameter that was not set on
  // the command line. ConfigError on unknown keys, type mismatches, a
  // missing or unsupported schema_version, or malformed JSON.
  void apply_config() const;

  // True when the parameter was set by a flag or by the config file.
  [[nodiscard]] bool given(const std::string& name) const;

 private:
  using Target = std::variant<double*, int*, std::uint64_t*, std::string*, bool*,
                              std::vector<double>*, std::vector<std::string>*>;
  struct Param {
    std::string name;
    Target target;
    CLI::Option* option;
  };

  CLI::App* app_;
  std::string config_path_;
  std::vector<Param> params_;
  mutable std::vector<std::string> from_config_;
};

}  // namespace savi::cli

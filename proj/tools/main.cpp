#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "idemcodes/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Minimal left group codes from semisimple group algebras"};
  app.require_subcommand(1);

  idemcodes::RunConfig cfg;
  app.add_option("--group", cfg.group_spec,
                 "group spec: cyclic(n) | metacyclic(m,n,r) | direct(spec,spec) | cayley(file)")
      ->envname("IDEMCODES_GROUP")
      ->required();
  app.add_option("--field", cfg.field_spec, "finite field, e.g. gf(2) or gf(2^2)")
      ->envname("IDEMCODES_FIELD");
  app.add_option("--budget", cfg.budget, "codeword enumeration budget (messages)")
      ->envname("IDEMCODES_BUDGET");
  app.add_option("--output", cfg.output, "text | json")->envname("IDEMCODES_OUTPUT");
  app.add_option("--export", cfg.export_path, "write the best generator matrix here")
      ->envname("IDEMCODES_EXPORT");
  app.add_option("--threads", cfg.threads, "worker threads for enumeration kernels")
      ->envname("IDEMCODES_THREADS");

  for (const char* cmd : {"ssp", "wedderburn", "idempotents", "codes", "search"}) {
    app.add_subcommand(cmd)->callback([&cfg, cmd] { cfg.command = cmd; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    idemcodes::RunResult res = idemcodes::run(cfg);
    std::cout << res.out;
    return res.exit_code;
  } catch (const idemcodes::error& e) {
    if (cfg.output == "json") {
      std::cout << "{\n  \"error\": {\n    \"code\": \""
                << idemcodes::errc_name(e.code()) << "\",\n    \"message\": "
                << nlohmann::json(std::string(e.what())).dump() << "\n  }\n}\n";
    }
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

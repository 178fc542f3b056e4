#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "latlas/atlas.hpp"
#include "latlas/catalog.hpp"
#include "latlas/serialize.hpp"
#include "latlas/taxonomy.hpp"
#include "latlas/topdown.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCap = 2;
constexpr int kExitCheckpoint = 3;

struct GroupInput {
  std::string name;    // output base name
  std::string family;  // catalog family or "other"
  latlas::PermGroup group;
};

GroupInput resolve_group(const std::string& file, const std::string& name) {
  if (!name.empty()) {
    auto entry = latlas::catalog_lookup(name);
    return {entry.name, entry.family, entry.group};
  }
  if (file.empty())
    throw latlas::parse_error("no group given: pass a file or --group NAME");
  GroupInput in;
  in.name = std::filesystem::path(file).stem().string();
  in.family = "other";
  in.group = latlas::parse_group_file(file);
  return in;
}

latlas::NameDatabase load_database(const std::string& flag_path) {
  latlas::NameDatabase db = latlas::NameDatabase::builtins();
  std::string path = flag_path;
  if (path.empty())
    if (const char* env = std::getenv("LATLAS_NAME_DB")) path = env;
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in)
      throw latlas::parse_error("cannot open name database " + path);
    db.load(latlas::json::parse(in, nullptr, true));
  }
  return db;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw latlas::error("cannot write " + path.string());
  out << text;
}

void write_checkpoint(const std::string& path, const latlas::PermGroup& g,
                      const latlas::TopDownEngine::Snapshot& snap) {
  std::filesystem::path tmp = path + ".tmp";
  write_file(tmp, latlas::checkpoint_to_json(g, snap).dump(2) + "\n");
  std::filesystem::rename(tmp, path);
}

int run_compute(const GroupInput& in, const latlas::Config& cfg,
                const std::string& out_dir, const std::string& formats,
                const std::string& checkpoint, bool resume,
                const latlas::NameDatabase& db, std::uint64_t max_order) {
  if (max_order && in.group.order() > max_order)
    throw latlas::cap_exceeded("group order " + in.group.order().str() +
                               " exceeds --max-order " +
                               std::to_string(max_order));

  std::optional<latlas::TopDownEngine> engine;
  if (resume) {
    if (checkpoint.empty())
      throw latlas::parse_error("--resume requires --checkpoint PATH");
    std::ifstream cp(checkpoint);
    if (!cp)
      throw latlas::parse_error("cannot open checkpoint " + checkpoint);
    auto snap = latlas::snapshot_from_json(
        latlas::json::parse(cp, nullptr, true), in.group);
    engine.emplace(in.group, cfg, snap);
  } else {
    engine.emplace(in.group, cfg);
  }

  if (checkpoint.empty()) {
    engine->run();
  } else {
    // one frontier expansion per unit of work, checkpoint between units
    while (!engine->done()) {
      engine->step();
      write_checkpoint(checkpoint, in.group, engine->snapshot());
    }
  }
  auto lat = engine->finalize();

  auto page = latlas::make_atlas_page(in.name, in.family, std::move(lat), db,
                                      cfg);
  latlas::BigInt total = 0;
  for (const auto& c : page.lattice.classes) total += c.class_length;

  std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  std::stringstream fmts(formats);
  std::string fmt;
  std::vector<std::string> written;
  while (std::getline(fmts, fmt, ',')) {
    if (fmt == "dot")
      write_file(dir / (in.name + ".dot"), latlas::emit_dot(page));
    else if (fmt == "json")
      write_file(dir / (in.name + ".json"), latlas::emit_json(page));
    else if (fmt == "html")
      write_file(dir / (in.name + ".html"), latlas::emit_html(page));
    else
      throw latlas::parse_error("unknown format \"" + fmt +
                                "\" (expected dot, json or html)");
    written.push_back((dir / (in.name + "." + fmt)).string());
  }
  std::cout << in.name << ": " << page.lattice.classes.size() << " classes, "
            << total << " subgroups";
  for (const auto& w : written) std::cout << " " << w;
  std::cout << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted subgroup-lattice atlas generator"};
  app.require_subcommand(1);

  std::string file, group, out_dir = ".", formats = "dot,json,html";
  std::string checkpoint, name_db;
  bool resume = false, improved = false;
  std::uint64_t max_order = 0, seed = 0;
  unsigned threads = 1;

  auto* compute = app.add_subcommand(
      "compute", "compute the lattice and write atlas pages");
  compute->add_option("file", file, "group file (degree n + cycle lines)");
  compute->add_option("--group", group, "catalog group name");
  compute->add_option("--out", out_dir, "output directory");
  compute->add_option("--format", formats, "comma list of dot,json,html");
  compute->add_option("--checkpoint", checkpoint,
                      "write a resumable checkpoint here after each step");
  compute->add_flag("--resume", resume, "resume from --checkpoint");
  compute->add_option("--name-db", name_db, "extra name database (JSON)");
  compute->add_option("--max-order", max_order,
                      "refuse groups larger than this");
  compute->add_option("--threads", threads, "frontier expansion threads");
  compute->add_option("--seed", seed, "reserved; pipeline is deterministic");

  auto* name_cmd =
      app.add_subcommand("name", "print the structure name of a group");
  name_cmd->add_option("file", file, "group file");
  name_cmd->add_option("--group", group, "catalog group name");
  name_cmd->add_flag("--improved", improved,
                     "database-and-recognizer name instead of the "
                     "composition-series name");
  name_cmd->add_option("--name-db", name_db, "extra name database (JSON)");

  auto* oracle = app.add_subcommand(
      "oracle", "bottom-up subgroup enumeration (exact, small groups)");
  oracle->add_option("file", file, "group file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    latlas::Config cfg;
    cfg.threads = threads;
    cfg.seed = seed;
    if (compute->parsed()) {
      return run_compute(resolve_group(file, group), cfg, out_dir, formats,
                         checkpoint, resume, load_database(name_db),
                         max_order);
    }
    if (name_cmd->parsed()) {
      GroupInput in = resolve_group(file, group);
      if (improved)
        std::cout << latlas::name_group(in.group, load_database(name_db), cfg)
                  << "\n";
      else
        std::cout << latlas::name_group_base(in.group, cfg) << "\n";
      return kExitOk;
    }
    // oracle
    latlas::PermGroup g = latlas::parse_group_file(file);
    auto lat = latlas::fuse_into_classes(
        latlas::SubgroupPoset::all_subgroups(g, cfg), cfg);
    latlas::BigInt total = 0;
    for (const auto& c : lat.classes) total += c.class_length;
    std::cout << lat.classes.size() << " classes, " << total
              << " subgroups\n";
    return kExitOk;
  } catch (const latlas::checkpoint_mismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckpoint;
  } catch (const latlas::cap_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const latlas::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

const fs::path kDir = fs::path("/tmp") / "plab_cli_tests";

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run(const std::string& args, const std::string& env = "") {
  fs::create_directories(kDir);
  fs::path o = kDir / "stdout.txt", e = kDir / "stderr.txt";
  std::string cmd = env + (env.empty() ? "" : " ") + PLAB_BIN + " " + args + " > " +
                    o.string() + " 2> " + e.string();
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  r.out = slurp(o);
  r.err = slurp(e);
  return r;
}

std::string write_file(const std::string& name, const std::string& body) {
  fs::create_directories(kDir);
  fs::path p = kDir / name;
  std::ofstream(p) << body;
  return p.string();
}

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

size_t count_lines(const std::string& text) {
  size_t n = 0;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) ++n;
  return n;
}

}  // namespace

TEST_CASE("fit reports the degree profile and MLE") {
  std::string tri = write_file("tri.edges", "1 2\n2 3\n1 3\n");
  RunResult r = run("fit " + tri);
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "n=3"));
  CHECK(has_line(r.out, "m=3"));
  CHECK(has_line(r.out, "maxdeg=2"));
  CHECK(has_line(r.out, "alpha=1.72135"));
  RunResult x2 = run("fit " + tri + " --xmin 2");
  CHECK(x2.code == 0);
  CHECK(has_line(x2.out, "alpha=4.47606"));
}

TEST_CASE("fit fails cleanly on empty or missing input") {
  std::string empty = write_file("empty.edges", "");
  CHECK(run("fit " + empty).code == 1);
  CHECK(run("fit " + (kDir / "no_such_file.edges").string()).code == 1);
  std::string bad = write_file("bad.edges", "1 2\noops\n");
  RunResult r = run("fit " + bad);
  CHECK(r.code == 1);
  CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("label writes the documented dump format") {
  std::string p3 = write_file("p3.edges", "1 2\n2 3\n");
  std::string out = (kDir / "p3.labels").string();
  RunResult r = run("label " + p3 + " --threshold 2 --mode bitstring --out " + out);
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "threshold=2"));
  CHECK(has_line(r.out, "mode=bitstring"));
  CHECK(has_line(r.out, "idbits=2"));
  CHECK(has_line(r.out, "fat=1"));
  CHECK(has_line(r.out, "max_label_bits=5"));
  CHECK(has_line(r.out, "total_label_bits=14"));
  std::string dump = slurp(out);
  CHECK(has_line(dump, "# plab labels n=3 idbits=2 threshold=2 mode=bitstring fat=1"));
  CHECK(has_line(dump, "1 2 0 5 40"));
  CHECK(has_line(dump, "2 1 1 4 00"));
  CHECK(has_line(dump, "3 3 0 5 40"));

  RunResult r2 = run("label " + p3 + " --threshold 2 --mode bitstring --out " + out + ".b");
  CHECK(slurp(out + ".b") == dump);

  RunResult sparse = run("label " + p3 + " --threshold sparse --out " + out + ".c");
  CHECK(sparse.code == 0);
  CHECK(has_line(sparse.out, "threshold=2"));

  CHECK(run("label " + p3 + " --threshold bogus --out " + out + ".d").code != 0);
  CHECK(run("label " + p3 + " --threshold 0 --out " + out + ".e").code != 0);
}

TEST_CASE("label on an isolated vertex emits an empty payload marker") {
  std::string loop = write_file("loop.edges", "5 5\n");
  std::string out = (kDir / "loop.labels").string();
  RunResult r = run("label " + loop + " --threshold 1 --out " + out);
  CHECK(r.code == 0);
  CHECK(has_line(slurp(out), "5 1 0 2 -"));
}

TEST_CASE("sweep emits per-threshold maxima and a summary trailer") {
  std::string p3 = write_file("p3.edges", "1 2\n2 3\n");
  std::string out = (kDir / "p3.csv").string();
  RunResult r = run("sweep " + p3 + " --mode concat --out " + out);
  CHECK(r.code == 0);
  std::string csv = slurp(out);
  CHECK(has_line(csv, "threshold,max_thin_bits,max_fat_bits,max_bits"));
  CHECK(has_line(csv, "1,0,7,7"));
  CHECK(has_line(csv, "2,5,3,5"));
  CHECK(has_line(csv, "3,7,0,7"));
  CHECK(has_line(csv, "# empirical_threshold=2,empirical_max_bits=5,"
                      "predicted_threshold=2,predicted_max_bits=5"));
  CHECK(has_line(r.out, "empirical_threshold=2"));
  CHECK(has_line(r.out, "empirical_max_bits=5"));

  // no usable exponent: the predicted fields stay empty
  std::string loop = write_file("loop.edges", "5 5\n");
  RunResult r2 = run("sweep " + loop + " --out " + out + ".b");
  CHECK(r2.code == 0);
  CHECK(has_line(slurp(out + ".b"),
                 "# empirical_threshold=1,empirical_max_bits=2,"
                 "predicted_threshold=,predicted_max_bits="));
}

TEST_CASE("generate powerlaw is deterministic per seed") {
  std::string a = (kDir / "gen_a.edges").string();
  std::string b = (kDir / "gen_b.edges").string();
  RunResult r = run("generate --kind powerlaw --n 500 --alpha 2.5 --seed 3 --out " + a);
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "n=500"));
  CHECK(run("generate --kind powerlaw --n 500 --alpha 2.5 --seed 3 --out " + b).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(run("generate --kind powerlaw --n 500 --alpha 2.5 --seed 4 --out " + b).code == 0);
  CHECK(slurp(a) != slurp(b));
  RunResult f = run("fit " + a);
  CHECK(has_line(f.out, "n=500"));
}

TEST_CASE("generate ba grows m edges per vertex and logs attachments") {
  std::string out = (kDir / "ba.edges").string();
  std::string log = (kDir / "ba.log").string();
  RunResult r = run("generate --kind ba --n 100 --m 1 --seed 2 --out " + out +
                    " --log-out " + log);
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "m=99"));  // K2 seed plus one edge for each of 98 vertices
  size_t edges = 0;
  std::istringstream in(slurp(out));
  for (std::string l; std::getline(in, l);)
    if (!l.empty() && l[0] != '#') ++edges;
  CHECK(edges == 99);
  std::string lg = slurp(log);
  CHECK(count_lines(lg) == 98);
  CHECK(lg.rfind("2: ", 0) == 0);  // first inserted vertex has index 2
}

TEST_CASE("generate validates its parameter combinations") {
  CHECK(run("generate --kind powerlaw --n 100 --m 2 --seed 1 --out " +
            (kDir / "x.edges").string()).code != 0);
  CHECK(run("generate --kind ba --n 100 --alpha 2.5 --seed 1 --out " +
            (kDir / "x.edges").string()).code != 0);
  CHECK(run("generate --kind powerlaw --n 100 --seed 1 --out " +
            (kDir / "x.edges").string()).code != 0);
  CHECK(run("generate --kind nope --n 100 --alpha 2.5 --out " +
            (kDir / "x.edges").string()).code != 0);
}

TEST_CASE("verify distinguishes members from non-members by exit code") {
  std::string tri = write_file("tri.edges", "1 2\n2 3\n1 3\n");
  RunResult r = run("verify " + tri + " --alpha 2.5 --family proper");
  CHECK(r.code == 2);
  CHECK(has_line(r.out, "family=proper"));
  CHECK(has_line(r.out, "member=false"));
  CHECK(r.out.find("violation cond=cond2 k=2 observed=3") != std::string::npos);

  std::ostringstream star;
  for (int v = 2; v <= 1000; ++v) star << "1 " << v << "\n";
  std::string sf = write_file("star.edges", star.str());
  RunResult ok = run("verify " + sf + " --alpha 2.5 --family palpha");
  CHECK(ok.code == 0);
  CHECK(has_line(ok.out, "member=true"));

  std::string empty = write_file("empty.edges", "");
  CHECK(run("verify " + empty + " --alpha 2.5 --family proper").code == 0);
  CHECK(run("verify " + tri + " --family proper").code != 0);          // alpha required
  CHECK(run("verify " + tri + " --alpha 2.5 --family nope").code != 0);
  CHECK(run("verify " + (kDir / "missing.edges").string() + " --alpha 2.5 --family proper").code == 1);
}

TEST_CASE("embed produces a verifiable host graph") {
  // i1(1000, 2.5) = 11: H is a path on 11 vertices
  std::ostringstream path;
  for (int v = 1; v <= 10; ++v) path << v << " " << v + 1 << "\n";
  std::string hf = write_file("h_path.edges", path.str());
  std::string g = (kDir / "embedded.edges").string();
  std::string map = (kDir / "embedded.map").string();
  RunResult r = run("embed --h-input " + hf + " --n 1000 --alpha 2.5 --seed 5 --out-graph " +
                    g + " --out-mapping " + map);
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "n=1000"));
  CHECK(has_line(r.out, "i1=11"));
  CHECK(has_line(r.out, "verified=true"));
  CHECK(count_lines(slurp(map)) == 11);
  CHECK(run("verify " + g + " --alpha 2.5 --family proper").code == 0);
  CHECK(run("verify " + g + " --alpha 2.5 --family palpha").code == 0);

  std::string h1 = write_file("h1.edges", "1 1\n");
  RunResult inf = run("embed --h-input " + h1 + " --n 1 --alpha 2.5 --seed 1 --out-graph " +
                      g + ".b --out-mapping " + map + ".b");
  CHECK(inf.code == 3);
  CHECK(inf.err.find("infeasible") != std::string::npos);
}

TEST_CASE("report emits one CSV row per readable dataset") {
  std::string tri = write_file("tri.edges", "1 2\n2 3\n1 3\n");
  std::string loop = write_file("loop.edges", "5 5\n");
  std::string missing = (kDir / "missing.edges").string();
  std::string out = (kDir / "report.csv").string();
  RunResult r = run("report " + tri + " " + loop + " " + missing + " --out " + out);
  CHECK(r.code == 0);
  CHECK(r.err.find("error: " + missing) != std::string::npos);
  std::string csv = slurp(out);
  CHECK(has_line(csv,
                 "dataset,n,m,maxdeg,alpha,predicted_threshold,predicted_max_bits,"
                 "empirical_threshold,empirical_max_bits,powerlaw_bound_bits,"
                 "sparse_bound_bits,bd_bound_bits,aktz_bound_bits,mode,seed"));
  CHECK(count_lines(csv) == 3);  // header + two rows
  CHECK(csv.find("tri,3,3,2,1.72135,2,7,1,7,") != std::string::npos);  // dataset column uses the stem
  // degenerate single-vertex dataset: no alpha, no n>=3 bounds, but sweeps run
  CHECK(has_line(csv, "loop,1,0,0,,,,1,2,,,0,6,concat,"));

  CHECK(run("report " + missing).code == 1);
  RunResult stdout_mode = run("report " + tri);
  CHECK(stdout_mode.code == 0);
  CHECK(count_lines(stdout_mode.out) == 2);
}

TEST_CASE("PLAB_OUT_DIR prefixes derived default output names") {
  fs::path envdir = kDir / "outdir";
  fs::create_directories(envdir);
  std::string name = "powerlaw_n40_a2.5_s9.edges";
  fs::remove(envdir / name);
  RunResult r = run("generate --kind powerlaw --n 40 --alpha 2.5 --seed 9",
                    "PLAB_OUT_DIR=" + envdir.string());
  CHECK(r.code == 0);
  CHECK(fs::exists(envdir / name));
  // explicit --out wins over the environment
  std::string explicit_out = (kDir / "explicit.edges").string();
  RunResult r2 = run("generate --kind powerlaw --n 40 --alpha 2.5 --seed 9 --out " + explicit_out,
                     "PLAB_OUT_DIR=" + envdir.string());
  CHECK(r2.code == 0);
  CHECK(fs::exists(explicit_out));
}

#include "bookemb/solver_io.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "bookemb/text_io.hpp"

namespace bookemb {

namespace {

constexpr std::uint64_t kFnvBasis = 14695981039346656037ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

std::uint64_t fnv1a64_accum(std::uint64_t h, const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= kFnvPrime;
  }
  return h;
}

// Buffered writer with manual integer formatting; ostringstream per literal is
// far too slow at tens of millions of clauses.
class BufWriter {
 public:
  explicit BufWriter(std::ostream& out) : out_(out), buf_(1 << 20) {}
  void ch(char c) {
    need(1);
    buf_[used_++] = c;
  }
  void str(const char* s) {
    std::size_t len = std::strlen(s);
    need(len);
    std::memcpy(buf_.data() + used_, s, len);
    used_ += len;
  }
  void num(std::int64_t v) {
    need(24);
    auto r = std::to_chars(buf_.data() + used_, buf_.data() + buf_.size(), v);
    used_ = (std::size_t)(r.ptr - buf_.data());
  }
  void flush() {
    if (used_) {
      out_.write(buf_.data(), (std::streamsize)used_);
      total_ += used_;
      used_ = 0;
    }
  }
  std::size_t total() const { return total_ + used_; }

 private:
  void need(std::size_t k) {
    if (used_ + k > buf_.size()) flush();
  }
  std::ostream& out_;
  std::vector<char> buf_;
  std::size_t used_ = 0;
  std::size_t total_ = 0;
};

void append_int(std::string& s, std::int64_t v) {
  char buf[24];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  s.append(buf, r.ptr);
}

// Clause body (no header) of `cnf` appended to `s`; literals are checked
// against num_vars.  The same text is what write_dimacs emits after its header.
void append_clause_body(std::string& s, const std::vector<std::vector<std::int32_t>>& clauses,
                        std::uint32_t num_vars) {
  for (const auto& c : clauses) {
    if (c.empty()) throw Error(ErrorKind::UsageError, "empty clause");
    for (std::int32_t l : c) {
      if (l == 0 || (std::uint32_t)std::abs(l) > num_vars)
        throw Error(ErrorKind::UsageError, "literal out of range: " + std::to_string(l));
      append_int(s, l);
      s.push_back(' ');
    }
    s += "0\n";
  }
}

std::string substitute_cnf(const std::string& tmpl, const std::string& path) {
  std::string cmd;
  std::size_t pos = 0, hit;
  bool found = false;
  while ((hit = tmpl.find("{cnf}", pos)) != std::string::npos) {
    cmd += tmpl.substr(pos, hit - pos);
    cmd += path;
    pos = hit + 5;
    found = true;
  }
  cmd += tmpl.substr(pos);
  if (!found)
    throw Error(ErrorKind::UsageError, "backend command template must contain {cnf}");
  return cmd;
}

struct RawRun {
  std::string output;
  int exit_code = -1;
  double seconds = 0.0;
  bool timed_out = false;
  bool cancelled = false;
  bool truncated = false;
};

RawRun run_process(const std::string& cmd, double timeout_s, const std::atomic<bool>* cancel) {
  int fds[2];
  if (pipe(fds) != 0)
    throw Error(ErrorKind::SpawnFailure, std::string("pipe: ") + std::strerror(errno));
  pid_t pid = fork();
  if (pid < 0) {
    int err = errno;
    close(fds[0]);
    close(fds[1]);
    throw Error(ErrorKind::SpawnFailure, std::string("fork: ") + std::strerror(err));
  }
  if (pid == 0) {
    setpgid(0, 0);
    int devnull = open("/dev/null", O_RDONLY);
    if (devnull >= 0) dup2(devnull, 0);
    dup2(fds[1], 1);
    dup2(fds[1], 2);
    close(fds[0]);
    close(fds[1]);
    if (devnull > 2) close(devnull);
    execl("/bin/sh", "sh", "-c", cmd.c_str(), (char*)nullptr);
    _exit(127);
  }
  setpgid(pid, pid);  // best effort; the child does the same
  close(fds[1]);

  RawRun rr;
  const auto start = std::chrono::steady_clock::now();
  const auto deadline = start + std::chrono::duration<double>(timeout_s);
  constexpr std::size_t kOutputCap = 256u << 20;
  bool killed = false;
  char buf[65536];
  const int fd = fds[0];
  while (true) {
    if (!killed) {
      bool want_kill = false;
      if (cancel && cancel->load(std::memory_order_relaxed)) {
        rr.cancelled = true;
        want_kill = true;
      } else if (std::chrono::steady_clock::now() >= deadline) {
        rr.timed_out = true;
        want_kill = true;
      }
      if (want_kill) {
        kill(-pid, SIGKILL);
        kill(pid, SIGKILL);
        killed = true;
      }
    }
    int wait_ms = 200;
    if (!killed) {
      auto rem = std::chrono::duration_cast<std::chrono::milliseconds>(
                     deadline - std::chrono::steady_clock::now())
                     .count();
      wait_ms = (int)std::clamp<long long>(rem, 0, 200);
    }
    struct pollfd pfd{fd, POLLIN, 0};
    int pr = poll(&pfd, 1, wait_ms);
    if (pr < 0) {
      if (errno == EINTR) continue;
      break;
    }
    if (pr > 0) {
      ssize_t n = read(fd, buf, sizeof buf);
      if (n > 0) {
        if (rr.output.size() + (std::size_t)n <= kOutputCap)
          rr.output.append(buf, (std::size_t)n);
        else
          rr.truncated = true;
        continue;
      }
      if (n == 0) break;  // EOF
      if (errno == EINTR) continue;
      break;
    }
  }
  close(fd);
  int st = 0;
  while (waitpid(pid, &st, 0) < 0 && errno == EINTR) {
  }
  rr.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  rr.exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : (WIFSIGNALED(st) ? 128 + WTERMSIG(st) : -1);
  return rr;
}

SolveOutcome outcome_from_raw(const RawRun& rr, const std::string& cmd, std::uint32_t num_vars,
                              const std::function<bool(const std::vector<bool>&)>& verify) {
  SolveOutcome oc;
  oc.backend = cmd;
  oc.wall_seconds = rr.seconds;
  if (rr.cancelled) {
    oc.reason = "cancelled";
    return oc;
  }
  if (rr.timed_out) {
    oc.reason = "timeout";
    return oc;
  }
  if (rr.truncated) {
    oc.reason = "backend output exceeded the size cap";
    return oc;
  }

  char status = 0;
  std::vector<bool> assign(num_vars + 1, false);
  bool model_closed = false, model_seen = false;
  const std::string& out = rr.output;
  std::size_t pos = 0;
  while (pos < out.size()) {
    std::size_t eol = out.find('\n', pos);
    if (eol == std::string::npos) eol = out.size();
    std::string_view line(out.data() + pos, eol - pos);
    pos = eol + 1;
    if (line.size() >= 2 && line[0] == 's' && line[1] == ' ') {
      std::string_view rest = line.substr(2);
      while (!rest.empty() && (rest.back() == '\r' || rest.back() == ' ')) rest.remove_suffix(1);
      if (rest == "SATISFIABLE") status = 'S';
      else if (rest == "UNSATISFIABLE") status = 'U';
      else if (rest == "UNKNOWN") status = '?';
    } else if (!line.empty() && line[0] == 'v' && (line.size() == 1 || line[1] == ' ')) {
      model_seen = true;
      const char* p = line.data() + 1;
      const char* end = line.data() + line.size();
      while (p < end) {
        while (p < end && (*p == ' ' || *p == '\r' || *p == '\t')) ++p;
        if (p >= end) break;
        long long v = 0;
        auto [np, ec] = std::from_chars(p, end, v);
        if (ec != std::errc())
          throw Error(ErrorKind::MalformedOutput, "unparseable model line from backend");
        p = np;
        if (v == 0) {
          model_closed = true;
        } else {
          long long a = v < 0 ? -v : v;
          if (a > (long long)num_vars)
            throw Error(ErrorKind::MalformedOutput,
                        "model literal out of range: " + std::to_string(v));
          assign[(std::size_t)a] = v > 0;
        }
      }
    }
  }

  if (status == 0) {
    if (rr.exit_code == 127)
      throw Error(ErrorKind::SpawnFailure, "backend command failed to start: " + cmd);
    oc.reason = "no status line from backend (exit " + std::to_string(rr.exit_code) + ")";
    return oc;
  }
  if (status == 'U') {
    oc.status = SolveStatus::Unsat;
    return oc;
  }
  if (status == '?') {
    oc.reason = "backend reported unknown";
    return oc;
  }
  if (!model_seen || !model_closed)
    throw Error(ErrorKind::MalformedOutput, "satisfiable answer without a complete model");
  if (!verify(assign))
    throw Error(ErrorKind::MalformedOutput, "backend model does not satisfy the formula");
  oc.status = SolveStatus::Sat;
  oc.model = std::move(assign);
  return oc;
}

bool safe_job_name(const std::string& s) {
  if (s.empty() || s[0] == '.') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_' && c != '.')
      return false;
  return true;
}

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

std::string format_hex64(std::uint64_t h) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return buf;
}

}  // namespace

std::uint64_t fnv1a64(const void* data, std::size_t len) {
  return fnv1a64_accum(kFnvBasis, data, len);
}

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Sat: return "sat";
    case SolveStatus::Unsat: return "unsat";
    case SolveStatus::Unknown: return "unknown";
  }
  return "unknown";
}

std::size_t write_dimacs(const CnfFormula& cnf, std::ostream& out) {
  BufWriter w(out);
  w.str("p cnf ");
  w.num(cnf.num_vars);
  w.ch(' ');
  w.num((std::int64_t)cnf.num_clauses());
  w.ch('\n');
  for (std::size_t c = 0; c + 1 < cnf.clause_starts.size(); ++c) {
    for (std::uint32_t i = cnf.clause_starts[c]; i < cnf.clause_starts[c + 1]; ++i) {
      w.num(cnf.lits[i]);
      w.ch(' ');
    }
    w.str("0\n");
  }
  w.flush();
  if (!out) throw Error(ErrorKind::IoError, "dimacs write failed");
  return w.total();
}

void write_dimacs_file(const CnfFormula& cnf, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot open " + path + " for writing");
  write_dimacs(cnf, out);
  out.flush();
  if (!out) throw Error(ErrorKind::IoError, "write failed on " + path);
}

CnfFormula parse_dimacs_text(const std::string& text) {
  CnfFormula cnf;
  const char* p = text.data();
  const char* end = p + text.size();
  auto skip_space = [&] {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r' || *p == '\n')) ++p;
  };
  auto skip_line = [&] {
    while (p < end && *p != '\n') ++p;
  };

  long long decl_vars = -1, decl_clauses = -1;
  while (true) {
    skip_space();
    if (p >= end) throw Error(ErrorKind::ParseError, "missing dimacs header");
    if (*p == 'c') {
      skip_line();
      continue;
    }
    break;
  }
  {
    const char* line_start = p;
    skip_line();
    std::istringstream hs(std::string(line_start, p));
    std::string tag, fmt;
    if (!(hs >> tag >> fmt >> decl_vars >> decl_clauses) || tag != "p" || fmt != "cnf" ||
        decl_vars < 0 || decl_clauses < 0)
      throw Error(ErrorKind::ParseError, "bad dimacs header");
  }
  cnf.num_vars = (std::uint32_t)decl_vars;
  cnf.reserve((std::size_t)decl_clauses, (std::size_t)decl_clauses * 4);

  std::vector<std::int32_t> cur;
  while (true) {
    skip_space();
    if (p >= end) break;
    if (*p == 'c') {
      skip_line();
      continue;
    }
    long long v = 0;
    auto [np, ec] = std::from_chars(p, end, v);
    if (ec != std::errc() || np == p)
      throw Error(ErrorKind::ParseError, "bad literal in dimacs body");
    p = np;
    if (v == 0) {
      if (cur.empty()) throw Error(ErrorKind::ParseError, "empty clause in dimacs body");
      cnf.add_clause(cur.begin(), cur.end());
      cur.clear();
    } else {
      long long a = v < 0 ? -v : v;
      if (a > decl_vars)
        throw Error(ErrorKind::ParseError, "literal exceeds declared variable count");
      cur.push_back((std::int32_t)v);
    }
  }
  if (!cur.empty()) throw Error(ErrorKind::ParseError, "unterminated clause");
  if ((long long)cnf.num_clauses() != decl_clauses)
    throw Error(ErrorKind::ParseError, "clause count does not match header");
  return cnf;
}

CnfFormula parse_dimacs_file(const std::string& path) { return parse_dimacs_text(read_file(path)); }

std::string write_varmap_text(const VarMap& vm) {
  std::string out;
  const auto& V = vm.vertex_list();
  const auto& E = vm.edge_list();
  out.reserve(24 * (V.size() * V.size() / 2 + (std::size_t)vm.pages() * E.size() +
                    vm.indep_pairs().size()));
  for (std::size_t i = 0; i < V.size(); ++i)
    for (std::size_t j = i + 1; j < V.size(); ++j) {
      out += "sigma ";
      append_int(out, V[i]);
      out.push_back(' ');
      append_int(out, V[j]);
      out.push_back(' ');
      append_int(out, vm.sigma(V[i], V[j]));
      out.push_back('\n');
    }
  for (int p = 0; p < vm.pages(); ++p)
    for (const Edge& e : E) {
      out += "phi ";
      append_int(out, p);
      out.push_back(' ');
      append_int(out, e.u);
      out.push_back(' ');
      append_int(out, e.v);
      out.push_back(' ');
      append_int(out, vm.phi(p, e));
      out.push_back('\n');
    }
  for (auto [i, j] : vm.indep_pairs()) {
    out += "chi ";
    append_int(out, E[i].u);
    out.push_back(' ');
    append_int(out, E[i].v);
    out.push_back(' ');
    append_int(out, E[j].u);
    out.push_back(' ');
    append_int(out, E[j].v);
    out.push_back(' ');
    append_int(out, vm.chi(E[i], E[j]));
    out.push_back('\n');
  }
  return out;
}

VarMap parse_varmap_text(const std::string& text) {
  struct SigmaRec {
    VertexId u, v;
    std::int64_t var;
  };
  struct PhiRec {
    int page;
    Edge e;
    std::int64_t var;
  };
  struct ChiRec {
    Edge e, f;
    std::int64_t var;
  };
  std::vector<SigmaRec> sigmas;
  std::vector<PhiRec> phis;
  std::vector<ChiRec> chis;
  std::set<VertexId> vset;
  std::set<Edge> eset;
  int pages = 0;

  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    auto fail = [&](const std::string& what) -> void {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + what);
    };
    if (tag == "sigma") {
      long long u, v, var;
      if (!(ls >> u >> v >> var)) fail("expected 'sigma <u> <v> <var>'");
      sigmas.push_back({(VertexId)u, (VertexId)v, var});
      vset.insert((VertexId)u);
      vset.insert((VertexId)v);
    } else if (tag == "phi") {
      long long p, u, v, var;
      if (!(ls >> p >> u >> v >> var)) fail("expected 'phi <page> <u> <v> <var>'");
      if (p < 0 || p > 64) fail("page out of range");
      pages = std::max(pages, (int)p + 1);
      Edge e((VertexId)u, (VertexId)v);
      phis.push_back({(int)p, e, var});
      vset.insert(e.u);
      vset.insert(e.v);
      eset.insert(e);
    } else if (tag == "chi") {
      long long u1, v1, u2, v2, var;
      if (!(ls >> u1 >> v1 >> u2 >> v2 >> var)) fail("expected 'chi <u1> <v1> <u2> <v2> <var>'");
      chis.push_back({Edge((VertexId)u1, (VertexId)v1), Edge((VertexId)u2, (VertexId)v2), var});
    } else {
      fail("unknown record '" + tag + "'");
    }
  }

  VarMap vm = VarMap::from_lists({vset.begin(), vset.end()}, {eset.begin(), eset.end()},
                                 pages > 0 ? pages : 1);
  const std::size_t n = vm.n();
  if (sigmas.size() != n * (n - 1) / 2)
    throw Error(ErrorKind::ParseError, "wrong number of sigma records");
  if (phis.size() != (std::size_t)vm.pages() * vm.m())
    throw Error(ErrorKind::ParseError, "wrong number of phi records");
  if (chis.size() != vm.indep_pairs().size())
    throw Error(ErrorKind::ParseError, "wrong number of chi records");
  for (const auto& r : sigmas)
    if ((std::int64_t)vm.sigma(r.u, r.v) != r.var)
      throw Error(ErrorKind::ParseError, "sigma record does not match the reconstructed map");
  for (const auto& r : phis)
    if ((std::int64_t)vm.phi(r.page, r.e) != r.var)
      throw Error(ErrorKind::ParseError, "phi record does not match the reconstructed map");
  for (const auto& r : chis)
    if ((std::int64_t)vm.chi(r.e, r.f) != r.var)
      throw Error(ErrorKind::ParseError, "chi record does not match the reconstructed map");
  return vm;
}

std::optional<std::string> discover_backend() {
  if (const char* env = std::getenv("SAT_SOLVER_CMD")) {
    std::string s = env;
    if (!s.empty()) return s;
  }
  const char* names[] = {"cadical",   "kissat",     "cryptominisat5", "glucose",    "glucose-simp",
                         "minisat",   "picosat",    "lingeling",      "plingeling", "treengeling"};
  const char* path = std::getenv("PATH");
  if (!path) return std::nullopt;
  const std::string P = path;
  for (const char* name : names) {
    std::size_t start = 0;
    while (start <= P.size()) {
      std::size_t colon = P.find(':', start);
      std::string dir =
          P.substr(start, colon == std::string::npos ? std::string::npos : colon - start);
      if (!dir.empty()) {
        std::string full = dir + "/" + name;
        if (::access(full.c_str(), X_OK) == 0) return std::string(name) + " {cnf}";
      }
      if (colon == std::string::npos) break;
      start = colon + 1;
    }
  }
  return std::nullopt;
}

SolveOutcome run_backend_at(const CnfFormula& cnf, const std::string& cnf_path,
                            const BackendConfig& cfg, const std::atomic<bool>* cancel) {
  if (cfg.timeout_seconds <= 0)
    throw Error(ErrorKind::UsageError, "backend timeout must be positive");
  std::string cmd = substitute_cnf(cfg.command_template, cnf_path);
  RawRun rr = run_process(cmd, cfg.timeout_seconds, cancel);
  return outcome_from_raw(rr, cmd, cnf.num_vars,
                          [&](const std::vector<bool>& m) { return satisfies(cnf, m); });
}

SolveOutcome run_backend(const CnfFormula& cnf, const BackendConfig& cfg) {
  const char* tmpdir = std::getenv("TMPDIR");
  std::string tmpl = std::string(tmpdir && *tmpdir ? tmpdir : "/tmp") + "/bookemb-XXXXXX.cnf";
  std::vector<char> t(tmpl.begin(), tmpl.end());
  t.push_back('\0');
  int fd = mkstemps(t.data(), 4);
  if (fd < 0)
    throw Error(ErrorKind::IoError, std::string("cannot create temp file: ") + std::strerror(errno));
  close(fd);
  std::string path(t.data());
  try {
    write_dimacs_file(cnf, path);
    SolveOutcome oc = run_backend_at(cnf, path, cfg);
    ::unlink(path.c_str());
    return oc;
  } catch (...) {
    ::unlink(path.c_str());
    throw;
  }
}

SplitResult solve_split(const CnfFormula& base, const std::vector<SplitJob>& jobs,
                        const BackendConfig& cfg, const std::string& log_dir) {
  if (jobs.empty()) throw Error(ErrorKind::UsageError, "need at least one split job");
  if (cfg.timeout_seconds <= 0)
    throw Error(ErrorKind::UsageError, "backend timeout must be positive");
  {
    std::set<std::string> names;
    for (const auto& j : jobs) {
      if (!safe_job_name(j.name))
        throw Error(ErrorKind::UsageError, "unsafe job name '" + j.name + "'");
      if (!names.insert(j.name).second)
        throw Error(ErrorKind::UsageError, "duplicate job name '" + j.name + "'");
    }
  }
  std::error_code ec;
  std::filesystem::create_directories(log_dir, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot create " + log_dir + ": " + ec.message());

  // Base clause body rendered once; each job file is header + body + extras.
  std::string body;
  body.reserve(base.lits.size() * 4 + base.num_clauses() * 2);
  {
    char nb[24];
    for (std::size_t c = 0; c + 1 < base.clause_starts.size(); ++c) {
      for (std::uint32_t i = base.clause_starts[c]; i < base.clause_starts[c + 1]; ++i) {
        auto r = std::to_chars(nb, nb + sizeof nb, base.lits[i]);
        body.append(nb, r.ptr);
        body.push_back(' ');
      }
      body += "0\n";
    }
  }

  const auto t0 = std::chrono::steady_clock::now();
  std::atomic<std::size_t> next{0};
  std::atomic<bool> found_sat{false};
  std::vector<SolveOutcome> results(jobs.size());
  std::mutex mtx;
  std::optional<std::size_t> first_sat;

  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      const SplitJob& job = jobs[i];
      std::string log_path = log_dir + "/" + job.name + ".log";
      if (found_sat.load()) {
        results[i].reason = "skipped: an earlier job was satisfiable";
        std::ofstream log(log_path, std::ios::trunc);
        log << "job " << job.name << "\nstatus unknown\nreason " << results[i].reason << "\n";
        continue;
      }
      std::string cnf_path = log_dir + "/" + job.name + ".cnf";
      SolveOutcome oc;
      std::string cmd;
      std::uint64_t hash = kFnvBasis;
      const std::size_t job_clauses = base.num_clauses() + job.extra_clauses.size();
      try {
        std::string header = "p cnf ";
        append_int(header, base.num_vars);
        header.push_back(' ');
        append_int(header, (std::int64_t)job_clauses);
        header.push_back('\n');
        std::string extra;
        append_clause_body(extra, job.extra_clauses, base.num_vars);
        {
          std::ofstream f(cnf_path, std::ios::binary | std::ios::trunc);
          if (!f) throw Error(ErrorKind::IoError, "cannot open " + cnf_path);
          f.write(header.data(), (std::streamsize)header.size());
          f.write(body.data(), (std::streamsize)body.size());
          f.write(extra.data(), (std::streamsize)extra.size());
          f.flush();
          if (!f) throw Error(ErrorKind::IoError, "write failed on " + cnf_path);
        }
        hash = fnv1a64_accum(hash, header.data(), header.size());
        hash = fnv1a64_accum(hash, body.data(), body.size());
        hash = fnv1a64_accum(hash, extra.data(), extra.size());
        cmd = substitute_cnf(cfg.command_template, cnf_path);
        RawRun rr = run_process(cmd, cfg.timeout_seconds, &found_sat);
        auto verify = [&](const std::vector<bool>& m) {
          if (!satisfies(base, m)) return false;
          for (const auto& c : job.extra_clauses) {
            bool ok = false;
            for (std::int32_t l : c)
              if (l > 0 ? m[(std::size_t)l] : !m[(std::size_t)(-l)]) {
                ok = true;
                break;
              }
            if (!ok) return false;
          }
          return true;
        };
        oc = outcome_from_raw(rr, cmd, base.num_vars, verify);
      } catch (const Error& e) {
        oc = SolveOutcome{};
        oc.backend = cmd;
        oc.reason = e.what();
      }
      ::unlink(cnf_path.c_str());
      {
        std::ofstream log(log_path, std::ios::trunc);
        log << "job " << job.name << "\n";
        if (!cmd.empty()) log << "command " << cmd << "\n";
        log << "cnf fnv1a64 " << format_hex64(hash) << " clauses " << job_clauses << "\n";
        log << "status " << to_string(oc.status) << "\n";
        if (!oc.reason.empty()) log << "reason " << oc.reason << "\n";
        log << "seconds " << format_seconds(oc.wall_seconds) << "\n";
      }
      if (oc.status == SolveStatus::Sat) {
        std::lock_guard<std::mutex> g(mtx);
        if (!first_sat) first_sat = i;
        found_sat.store(true);
      }
      results[i] = std::move(oc);
    }
  };

  const int T = std::clamp(cfg.parallel_jobs, 1, (int)jobs.size());
  std::vector<std::thread> pool;
  for (int t = 1; t < T; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  SplitResult res;
  res.summary.reserve(jobs.size() * 32);
  std::size_t unsat_count = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const SolveOutcome& oc = results[i];
    if (oc.status == SolveStatus::Unsat) ++unsat_count;
    res.summary += "job " + jobs[i].name + " " + to_string(oc.status) + " " +
                   format_seconds(oc.wall_seconds) + "\n";
    SolveOutcome trimmed = oc;
    trimmed.model.clear();
    res.jobs.emplace_back(jobs[i].name, std::move(trimmed));
  }
  write_file(log_dir + "/summary.txt", res.summary);

  if (first_sat) {
    res.aggregate = results[*first_sat];
  } else if (unsat_count == jobs.size()) {
    res.aggregate.status = SolveStatus::Unsat;
    res.aggregate.backend = cfg.command_template;
  } else {
    res.aggregate.status = SolveStatus::Unknown;
    res.aggregate.backend = cfg.command_template;
    res.aggregate.reason =
        std::to_string(jobs.size() - unsat_count) + " of " + std::to_string(jobs.size()) +
        " jobs inconclusive";
  }
  res.aggregate.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace bookemb

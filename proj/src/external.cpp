#include "ddnf/external.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

namespace ddnf {

namespace {

struct RunResult {
    std::string stdout_text;
    int exit_code = -1;
    bool timed_out = false;
};

// Run `sh -c command`, capture stdout, kill the process group on timeout.
RunResult run_with_timeout(const std::string& command, double timeout_seconds) {
    int pipefd[2];
    if (pipe(pipefd) != 0) throw std::runtime_error("pipe() failed");

    pid_t pid = fork();
    if (pid < 0) throw std::runtime_error("fork() failed");
    if (pid == 0) {
        setpgid(0, 0);
        dup2(pipefd[1], STDOUT_FILENO);
        close(pipefd[0]);
        close(pipefd[1]);
        execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
        _exit(127);
    }
    close(pipefd[1]);
    fcntl(pipefd[0], F_SETFL, O_NONBLOCK);

    RunResult result;
    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration<double>(timeout_seconds > 0 ? timeout_seconds : 1e9);
    char buf[4096];
    bool child_done = false;
    while (true) {
        pollfd pfd{pipefd[0], POLLIN, 0};
        int ready = poll(&pfd, 1, 50);
        if (ready > 0) {
            ssize_t got;
            while ((got = read(pipefd[0], buf, sizeof buf)) > 0)
                result.stdout_text.append(buf, static_cast<std::size_t>(got));
            if (got == 0) break; // EOF
        }
        int status = 0;
        if (!child_done && waitpid(pid, &status, WNOHANG) == pid) {
            child_done = true;
            result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        }
        if (child_done && ready <= 0) {
            // drain whatever is left
            ssize_t got;
            while ((got = read(pipefd[0], buf, sizeof buf)) > 0)
                result.stdout_text.append(buf, static_cast<std::size_t>(got));
            break;
        }
        if (std::chrono::steady_clock::now() > deadline) {
            result.timed_out = true;
            kill(-pid, SIGKILL);
            break;
        }
    }
    close(pipefd[0]);
    if (!child_done) {
        int status = 0;
        waitpid(pid, &status, 0);
        if (!result.timed_out)
            result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }
    return result;
}

std::string make_temp_cnf_path() {
    static std::atomic<unsigned> counter{0};
    auto dir = std::filesystem::temp_directory_path();
    return (dir / ("ddnf_" + std::to_string(::getpid()) + "_" +
                   std::to_string(counter++) + ".cnf")).string();
}

} // namespace

SolveOutcome solve_external(const CnfFormula& f, const std::string& solver_command,
                            const SolveBudget& budget) {
    std::string path = make_temp_cnf_path();
    {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write temp CNF: " + path);
        write_dimacs(out, f);
    }
    struct Cleanup {
        std::string path;
        ~Cleanup() { std::filesystem::remove(path); }
    } cleanup{path};

    std::string command = solver_command;
    auto pos = command.find("{cnf}");
    if (pos != std::string::npos) command.replace(pos, 5, path);
    else command += " " + path;

    auto start = std::chrono::steady_clock::now();
    RunResult run = run_with_timeout(command, budget.time_limit_seconds);

    SolveOutcome out;
    out.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (run.timed_out) {
        out.status = SolveStatus::Timeout;
        return out;
    }

    bool saw_sat = false, saw_unsat = false;
    std::vector<int> model_lits;
    std::istringstream lines(run.stdout_text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.rfind("s SATISFIABLE", 0) == 0) saw_sat = true;
        else if (line.rfind("s UNSATISFIABLE", 0) == 0) saw_unsat = true;
        else if (!line.empty() && line[0] == 'v') {
            std::istringstream ls(line.substr(1));
            int lit;
            while (ls >> lit)
                if (lit != 0) model_lits.push_back(lit);
        }
    }
    if (!saw_sat && !saw_unsat) {
        if (run.exit_code == 10) saw_sat = true;
        else if (run.exit_code == 20) saw_unsat = true;
    }

    if (saw_unsat) {
        out.status = SolveStatus::Unsatisfiable;
        return out;
    }
    if (saw_sat) {
        // unmentioned variables default to false before validation
        std::vector<bool> model(f.num_vars + 1, false);
        for (int lit : model_lits) {
            int var = std::abs(lit);
            if (var >= 1 && var <= f.num_vars) model[var] = lit > 0;
        }
        if (!f.satisfied_by(model))
            throw std::runtime_error("external solver model fails re-validation (command: " +
                                     solver_command + ")");
        out.status = SolveStatus::Satisfiable;
        out.model = std::move(model);
        return out;
    }

    out.status = SolveStatus::Unknown;
    out.diagnostic = "unparsable solver output (exit code " +
                     std::to_string(run.exit_code) + ")";
    return out;
}

} // namespace ddnf

// SPDX-License-Identifier: Apache-2.0
#include "osgen/host/process.hpp"

#include <cerrno>
#include <csignal>
#include <cstring>
#include <fcntl.h>
#include <fstream>
#include <poll.h>
#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

#include "osgen/error.hpp"

namespace osgen::host {

namespace {

using Clock = std::chrono::steady_clock;

int remaining_ms(Clock::time_point deadline) {
    const auto left = std::chrono::ceil<std::chrono::milliseconds>(deadline - Clock::now()).count();
    if (left <= 0) return 0;
    return left > 1'000'000 ? 1'000'000 : static_cast<int>(left);
}

void close_fd(int& fd) noexcept {
    if (fd >= 0) ::close(fd);
    fd = -1;
}

} // namespace

std::string encode_frame(const nlohmann::json& message) {
    const std::string body = message.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
    const auto n = static_cast<std::uint32_t>(body.size());
    std::string out;
    out.reserve(4 + body.size());
    out.push_back(static_cast<char>((n >> 24) & 0xff));
    out.push_back(static_cast<char>((n >> 16) & 0xff));
    out.push_back(static_cast<char>((n >> 8) & 0xff));
    out.push_back(static_cast<char>(n & 0xff));
    out += body;
    return out;
}

WorkerProcess::WorkerProcess(LaunchSpec launch) : spec_(std::move(launch)) {}

WorkerProcess::~WorkerProcess() { kill(); }

void WorkerProcess::start() {
    if (running()) return;
    if (spec_.argv.empty()) throw HostError("empty worker command");
    std::signal(SIGPIPE, SIG_IGN);

    int in_pipe[2];
    int out_pipe[2];
    if (::pipe2(in_pipe, O_CLOEXEC) != 0) throw HostError(std::string("pipe: ") + std::strerror(errno));
    if (::pipe2(out_pipe, O_CLOEXEC) != 0) {
        ::close(in_pipe[0]);
        ::close(in_pipe[1]);
        throw HostError(std::string("pipe: ") + std::strerror(errno));
    }
    std::vector<char*> argv;
    for (auto& a : spec_.argv) argv.push_back(a.data());
    argv.push_back(nullptr);
    const std::string err_path = spec_.stderr_path.empty() ? "/dev/null" : spec_.stderr_path.string();

    const pid_t pid = ::fork();
    if (pid < 0) {
        for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) ::close(fd);
        throw HostError(std::string("fork: ") + std::strerror(errno));
    }
    if (pid == 0) {
        ::dup2(in_pipe[0], 0);
        ::dup2(out_pipe[1], 1);
        const int err = ::open(err_path.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
        if (err >= 0) ::dup2(err, 2);
        if (spec_.memory_mb > 0) {
            rlimit lim{};
            lim.rlim_cur = lim.rlim_max = static_cast<rlim_t>(spec_.memory_mb) << 20;
            ::setrlimit(RLIMIT_AS, &lim);
        }
        ::execvp(argv[0], argv.data());
        _exit(127);
    }
    ::close(in_pipe[0]);
    ::close(out_pipe[1]);
    pid_ = pid;
    to_child_ = in_pipe[1];
    from_child_ = out_pipe[0];
}

void WorkerProcess::kill() noexcept {
    close_fd(to_child_);
    close_fd(from_child_);
    if (pid_ > 0) {
        ::kill(pid_, SIGKILL);
        int status = 0;
        while (::waitpid(pid_, &status, 0) < 0 && errno == EINTR) {
        }
    }
    pid_ = -1;
}

void WorkerProcess::fail_dead(const std::string& op) {
    std::string why = "worker died during '" + op + "'";
    if (pid_ > 0) {
        int status = 0;
        // Give the kernel a moment to deliver the exit status.
        for (int i = 0; i < 50; ++i) {
            const pid_t r = ::waitpid(pid_, &status, WNOHANG);
            if (r == pid_) {
                if (WIFEXITED(status)) why += " (exit status " + std::to_string(WEXITSTATUS(status)) + ")";
                if (WIFSIGNALED(status)) why += " (signal " + std::to_string(WTERMSIG(status)) + ")";
                pid_ = -1;
                break;
            }
            ::usleep(2000);
        }
    }
    kill();
    const auto tail = stderr_tail(2048);
    if (!tail.empty()) why += "; stderr: " + tail;
    throw HostError(why);
}

void WorkerProcess::write_all(const std::string& bytes, Clock::time_point deadline, const std::string& op,
                              double limit_ms) {
    std::size_t off = 0;
    while (off < bytes.size()) {
        pollfd p{to_child_, POLLOUT, 0};
        const int r = ::poll(&p, 1, remaining_ms(deadline));
        if (r < 0 && errno == EINTR) continue;
        if (r == 0 && Clock::now() < deadline) continue;
        if (r == 0) {
            kill();
            throw HostTimeout(op, limit_ms);
        }
        const ssize_t w = ::write(to_child_, bytes.data() + off, bytes.size() - off);
        if (w < 0) {
            if (errno == EINTR || errno == EAGAIN) continue;
            fail_dead(op);
        }
        off += static_cast<std::size_t>(w);
    }
}

std::string WorkerProcess::read_exact(std::size_t n, Clock::time_point deadline, const std::string& op,
                                      double limit_ms) {
    std::string out(n, '\0');
    std::size_t off = 0;
    while (off < n) {
        pollfd p{from_child_, POLLIN, 0};
        const int r = ::poll(&p, 1, remaining_ms(deadline));
        if (r < 0 && errno == EINTR) continue;
        if (r == 0 && Clock::now() < deadline) continue;
        if (r == 0) {
            kill();
            throw HostTimeout(op, limit_ms);
        }
        const ssize_t got = ::read(from_child_, out.data() + off, n - off);
        if (got < 0) {
            if (errno == EINTR || errno == EAGAIN) continue;
            fail_dead(op);
        }
        if (got == 0) fail_dead(op);
        off += static_cast<std::size_t>(got);
    }
    return out;
}

nlohmann::json WorkerProcess::call(const nlohmann::json& request, std::chrono::milliseconds timeout,
                                   const std::string& op) {
    if (!running()) throw HostError("worker is not running");
    const auto limit_ms = static_cast<double>(timeout.count());
    const auto deadline = Clock::now() + timeout;
    write_all(encode_frame(request), deadline, op, limit_ms);
    const auto header = read_exact(4, deadline, op, limit_ms);
    const auto* h = reinterpret_cast<const unsigned char*>(header.data());
    const std::size_t len = (std::size_t{h[0]} << 24) | (std::size_t{h[1]} << 16) | (std::size_t{h[2]} << 8) | h[3];
    if (len > kMaxFrameBytes) {
        kill();
        throw HostError("worker sent an oversized frame (" + std::to_string(len) + " bytes)");
    }
    const auto body = read_exact(len, deadline, op, limit_ms);
    try {
        return nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
        kill();
        throw HostError(std::string("malformed frame from worker: ") + e.what());
    }
}

std::string WorkerProcess::stderr_tail(std::size_t max_bytes) const {
    if (spec_.stderr_path.empty()) return {};
    std::ifstream in(spec_.stderr_path, std::ios::binary);
    if (!in) return {};
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (all.size() > max_bytes) all = all.substr(all.size() - max_bytes);
    while (!all.empty() && (all.back() == '\n' || all.back() == ' ')) all.pop_back();
    return all;
}

} // namespace osgen::host

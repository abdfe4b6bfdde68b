#include "homw1/report.hpp"

#include <cstdlib>
#include <thread>

namespace homw1::report {

Json make_report(const std::string& command) {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    return j;
}

std::string serialize_report(const Json& r) { return r.dump(2) + "\n"; }

int thread_limit() {
    unsigned hw = std::thread::hardware_concurrency();
    int cap = hw ? static_cast<int>(hw) : 1;
    if (const char* env = std::getenv("HOMW1_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v < 1024) cap = std::min<long>(cap, v);
    }
    return cap;
}

}  // namespace homw1::report

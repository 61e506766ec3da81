#pragma once

// Shared fixtures: the shipped taxi files and the seven-fact fleet state.

#include <string>

#include "abp/parser.hpp"

#ifndef ABP_DOMAINS_DIR
#define ABP_DOMAINS_DIR "domains"
#endif

namespace abp::testing {

inline std::string domains_dir() { return ABP_DOMAINS_DIR; }

inline const Domain& taxi_domain() {
    static const Domain d = parse_domain_file(domains_dir() + "/taxi.abp");
    return d;
}

inline const Domain& taxi_loaded_domain() {
    static const Domain d = parse_domain_file(domains_dir() + "/taxi-loaded.abp");
    return d;
}

inline Problem taxi_problem() {
    return parse_problem_file(domains_dir() + "/taxi.p", taxi_domain());
}

inline Problem taxi_nofuel_problem() {
    return parse_problem_file(domains_dir() + "/taxi-nofuel.p", taxi_domain());
}

inline Problem taxi_fleet_problem() {
    return parse_problem_file(domains_dir() + "/taxi-fleet.p", taxi_loaded_domain());
}

// The seven-fact fleet state by itself.
inline KnowledgeState fleet_state() { return taxi_fleet_problem().init; }

// Preconditions of the drive-while-loaded operator.
inline const std::vector<Precondition>& move_loaded_pre() {
    return taxi_loaded_domain().find_operator("move-loaded")->pre;
}

}  // namespace abp::testing

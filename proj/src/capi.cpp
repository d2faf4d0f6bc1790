#include "solcm/solcm.h"

#include "solcm/error.hpp"
#include "solcm/report.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct solcm_prime_set {
  solcm::PrimeSet value;
};
struct solcm_ring {
  solcm::CoefficientRing value;
};
struct solcm_report {
  solcm::Report value;
};

namespace {

thread_local std::string last_error;

template <class F>
solcm_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return SOLCM_OK;
  } catch (const solcm::InconsistencyError& e) {
    last_error = e.what();
    return SOLCM_ERR_INCONSISTENT;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return SOLCM_ERR_INVALID;
  } catch (const std::out_of_range& e) {
    last_error = e.what();
    return SOLCM_ERR_INVALID;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SOLCM_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return SOLCM_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p)
    throw std::invalid_argument(std::string(what) + " is null");
}

solcm::Integer parse_integer(const char* text) {
  require(text, "q");
  solcm::Integer q;
  if (*text == '\0' || q.set_str(text, 10) != 0)
    throw std::invalid_argument(std::string("not an integer: '") + text + "'");
  return q;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Make>
solcm_status make_report(solcm_report** out, Make&& make) {
  return guarded([&] {
    require(out, "output pointer");
    *out = nullptr;
    *out = new solcm_report{make()};
  });
}

template <class Fn>
solcm_status solenoid_call(const solcm_prime_set* p, const solcm_ring* r, solcm_report** out,
                           Fn fn) {
  return make_report(out, [&] {
    require(p, "prime set");
    require(r, "ring");
    return fn(p->value, r->value);
  });
}

} // namespace

extern "C" {

const char* solcm_version(void) { return SOLCM_VERSION_STRING; }

const char* solcm_last_error(void) { return last_error.c_str(); }

solcm_status solcm_prime_set_parse(const char* spec, solcm_prime_set** out) {
  return guarded([&] {
    require(out, "output pointer");
    require(spec, "prime spec");
    *out = nullptr;
    *out = new solcm_prime_set{solcm::PrimeSet::parse(spec)};
  });
}

void solcm_prime_set_free(solcm_prime_set* p) { delete p; }

solcm_status solcm_ring_parse(const char* spec, solcm_ring** out) {
  return guarded([&] {
    require(out, "output pointer");
    require(spec, "ring spec");
    *out = nullptr;
    *out = new solcm_ring{solcm::CoefficientRing::parse(spec)};
  });
}

void solcm_ring_free(solcm_ring* r) { delete r; }

solcm_status solcm_lens(const char* q, const solcm_ring* ring, solcm_report** out) {
  return make_report(out, [&] {
    require(ring, "ring");
    return solcm::lens_report(parse_integer(q), ring->value);
  });
}

solcm_status solcm_suspend(const char* q, const solcm_ring* ring, solcm_report** out) {
  return make_report(out, [&] {
    require(ring, "ring");
    return solcm::suspension_report(parse_integer(q), ring->value);
  });
}

solcm_status solcm_local(const solcm_prime_set* p, const solcm_ring* r, solcm_report** out) {
  return solenoid_call(p, r, out, solcm::local_report);
}

solcm_status solcm_complement(const solcm_prime_set* p, const solcm_ring* r, solcm_report** out) {
  return solenoid_call(p, r, out, solcm::complement_report);
}

solcm_status solcm_pair(const solcm_prime_set* p, const solcm_ring* r, solcm_report** out) {
  return solenoid_call(p, r, out, solcm::pair_report);
}

solcm_status solcm_clc(const solcm_prime_set* p, const solcm_ring* r, solcm_report** out) {
  return solenoid_call(p, r, out, solcm::clc_report_document);
}

solcm_status solcm_classify(const solcm_prime_set* p, const solcm_ring* r, solcm_report** out) {
  return solenoid_call(p, r, out, solcm::classify_report);
}

solcm_status solcm_tower(solcm_tower_op op, const solcm_ring* base, const solcm_prime_set* primes,
                         size_t depth, solcm_report** out) {
  return make_report(out, [&] {
    require(base, "base ring");
    require(primes, "prime set");
    solcm::TowerOp o;
    switch (op) {
    case SOLCM_TOWER_LIM:
      o = solcm::TowerOp::Lim;
      break;
    case SOLCM_TOWER_LIM1:
      o = solcm::TowerOp::LimOne;
      break;
    case SOLCM_TOWER_COLIM:
      o = solcm::TowerOp::Colim;
      break;
    default:
      throw std::invalid_argument("unknown tower operation");
    }
    return solcm::tower_report(o, base->value, primes->value, depth);
  });
}

solcm_status solcm_report_set_command(solcm_report* r, const char* command) {
  return guarded([&] {
    require(r, "report");
    require(command, "command");
    r->value.command = command;
  });
}

solcm_status solcm_report_json(const solcm_report* r, int include_trace, char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "output pointer");
    *out = copy_string(r->value.json_text(include_trace != 0));
  });
}

solcm_status solcm_report_text(const solcm_report* r, int include_trace, char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "output pointer");
    *out = copy_string(r->value.text(include_trace != 0));
  });
}

void solcm_report_free(solcm_report* r) { delete r; }

void solcm_string_free(char* s) { std::free(s); }

} // extern "C"

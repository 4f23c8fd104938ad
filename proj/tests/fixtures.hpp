#pragma once

#include "nrsched/model.hpp"

namespace fixtures {

using nrsched::Instance;
using nrsched::Job;
using nrsched::JobClass;
using nrsched::SupplyProfile;

// Three unit-weight jobs p = (2,1,3), a = 1, u = (0,2), b~ = (1,2).
inline Instance instance_a() {
  return Instance::normal({Job{2, 1, 1}, Job{1, 1, 1}, Job{3, 1, 1}}, SupplyProfile({0, 2}, {1, 2}));
}

// Classes (s=2,p=1,w=3) and (s=2,p=2,w=1), a = 1, u = (0,3), b~ = (2,2).
inline Instance instance_c() {
  return Instance::hme({JobClass{2, 1, 3, 1}, JobClass{2, 2, 1, 1}}, SupplyProfile({0, 3}, {2, 2}));
}

}  // namespace fixtures

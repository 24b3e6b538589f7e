/* Copyright 2026 The stabpoly Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/


#pragma once

#include "stabpoly/census.hpp"
#include "stabpoly/dynamics.hpp"
#include "stabpoly/error.hpp"
#include "stabpoly/extension.hpp"
#include "stabpoly/factor.hpp"
#include "stabpoly/field.hpp"
#include "stabpoly/oracle.hpp"
#include "stabpoly/polynomial.hpp"
#include "stabpoly/report_json.hpp"
#include "stabpoly/text_format.hpp"
#include "stabpoly/verify.hpp"

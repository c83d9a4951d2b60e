#Copyright 2026 The spinerase authors. All rights reserved.
#This file is licensed to you under the Apache License, Version 2.0 (the "License");
#you may not use this file except in compliance with the License. You may obtain a copy
#of the License at http://www.apache.org/licenses/LICENSE-2.0

#Unless required by applicable law or agreed to in writing, software distributed under
#the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
#OF ANY KIND, either express or implied. See the License for the specific language
#governing permissions and limitations under the License.

from .trajectory import Step, TrajectoryRecord, CNOT, EQUILIBRATE, simulate_shot, entropy_production, \
    audit_first_law, block_rng, memory_delta_jz
from .batch import EmpiricalDistribution, BatchResult, ShotArrays, simulate_block, simulate_batch, \
    first_law_violations, STREAM_SHOTS

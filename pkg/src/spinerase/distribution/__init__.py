#Copyright 2026 The spinerase authors. All rights reserved.
#This file is licensed to you under the Apache License, Version 2.0 (the "License");
#you may not use this file except in compliance with the License. You may obtain a copy
#of the License at http://www.apache.org/licenses/LICENSE-2.0

#Unless required by applicable law or agreed to in writing, software distributed under
#the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
#OF ANY KIND, either express or implied. See the License for the specific language
#governing permissions and limitations under the License.

from .model import SpinlaborDistribution, LIMIT
from .recurrence import initial_distribution, step_distribution, limit_distribution, period_two_distribution
from .closed_form import q_pochhammer, closed_form_pr, finite_step_closed_form, nested_sum_A_bruteforce, \
    product_A, INFINITY
from .moments import mean_spinlabor, variance_spinlabor, moments_after, gaussian_distance, up_probabilities

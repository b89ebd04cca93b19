import requests
import time
import logging
from datetime import datetime

import config

# Configuration
BASE_URL = f"http://{config.API_HOST}:{config.API_PORT}"
HEADERS = {"Content-Type": "application/json"}
if config.AUTH_TOKEN:
    HEADERS["Authorization"] = f"Bearer {config.AUTH_TOKEN}"

# Set up logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(levelname)s - %(message)s',
    handlers=[
        logging.FileHandler('api_test.log'),
        logging.StreamHandler()
    ]
)
logger = logging.getLogger()

# Each case: method, path, query params or JSON body, and a check on the decoded response
TEST_CASES = [
    {
        "method": "GET",
        "path": "/api/v1/strata",
        "params": {"n": 5, "summary": "true"},
        "expect": lambda r: r["payload"]["total"] == 171,
    },
    {
        "method": "GET",
        "path": "/api/v1/fundamental",
        "params": {"n": 5},
        "expect": lambda r: r["payload"]["orbit_count"] == 13,
    },
    {
        "method": "GET",
        "path": "/api/v1/polytopes",
        "params": {"n": 4},
        "expect": lambda r: len(r["payload"]["polytopes"]) > 0,
    },
    {
        "method": "POST",
        "path": "/api/v1/moment",
        "json": {"sigma": [[1, 2], [1, 3], [1, 4], [1, 5], [2, 3], [2, 4], [2, 5], [3, 4], [3, 5], [4, 5]]},
        "expect": lambda r: r["dmu_rank"] == 4 and r["regular_point"],
    },
    {
        "method": "GET",
        "path": "/api/v1/params/check-transitions",
        "params": {"samples": 20, "seed": 7},
        "expect": lambda r: not any(r["payload"]["failures"].values()),
    },
    {
        "method": "GET",
        "path": "/api/v1/params/virtual",
        "params": {"sigma": "[[1,3],[1,4],[1,5],[2,3],[2,4],[2,5],[3,4],[3,5],[4,5]]", "chart": "13"},
        "expect": lambda r: len(r["payload"]["pieces"]) == 1,
    },
    {
        "method": "POST",
        "path": "/api/v1/params/embed",
        "json": {"triple": ["(2:1)", "(3:1)", "(3:2)"]},
        "expect": lambda r: r["payload"]["embedding"]["valid"],
    },
    {
        "method": "GET",
        "path": "/api/v1/homology",
        "params": {"space": "g52", "coeff": "z"},
        "expect": lambda r: [d["torsion"] for d in r["payload"]["degrees"] if d["degree"] == 5] == [[2]],
    },
    {
        "method": "GET",
        "path": "/api/v1/report-all",
        "params": {"n": 5, "seed": 7, "samples": 20},
        "expect": lambda r: r["payload"]["passed"],
    },
]


def test_endpoint(test_case):
    try:
        start_time = time.time()

        logger.info(f"\n{'='*50}")
        logger.info(f"Testing: {test_case['method']} {test_case['path']}")

        response = requests.request(
            test_case["method"],
            BASE_URL + test_case["path"],
            headers=HEADERS,
            params=test_case.get("params"),
            json=test_case.get("json"),
        )

        elapsed_time = time.time() - start_time

        logger.info(f"Status Code: {response.status_code}")
        logger.info(f"Response Time: {elapsed_time:.2f}s")

        if response.status_code != 200:
            logger.error(f"API Error: {response.text}")
            return elapsed_time, False

        passed = bool(test_case["expect"](response.json()))
        if not passed:
            logger.warning(f"Unexpected payload: {response.text[:500]}")
        return elapsed_time, passed

    except Exception as e:
        logger.error(f"Test failed: {str(e)}")
        return 0, False


def run_tests():
    total_time = 0
    successful_tests = 0
    test_count = 0

    logger.info("\nStarting API Tests at %s\n", datetime.now().strftime("%Y-%m-%d %H:%M:%S"))

    for i, case in enumerate(TEST_CASES, 1):
        logger.info(f"\n{'#'*20} Test Case {i} {'#'*20}")
        time_taken, success = test_endpoint(case)
        total_time += time_taken
        test_count += 1
        if success:
            successful_tests += 1

    logger.info(f"\n{'='*50}")
    logger.info("Testing Completed at %s", datetime.now().strftime("%Y-%m-%d %H:%M:%S"))
    logger.info(f"Total Tests Run: {test_count}")
    logger.info(f"Successful Tests: {successful_tests}")
    logger.info(f"Failed Tests: {test_count - successful_tests}")
    logger.info(f"Total Time: {total_time:.2f}s")
    logger.info(f"Average Time per Test: {total_time/test_count:.2f}s")

    # Write summary to separate file
    with open('test_summary.log', 'w') as f:
        f.write(f"Test Summary - {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}\n")
        f.write(f"Total Tests: {test_count}\n")
        f.write(f"Passed: {successful_tests}\n")
        f.write(f"Failed: {test_count - successful_tests}\n")
        f.write(f"Total Time: {total_time:.2f}s\n")
        f.write(f"Avg Time: {total_time/test_count:.2f}s\n")


if __name__ == "__main__":
    run_tests()

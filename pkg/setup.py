import os
import setuptools

# scrape dependencies from the requirements.txt file
requirements = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'requirements.txt')
with open(requirements, 'r') as stream:
    dependencies = [requirement.strip('\n') for requirement in stream.readlines() if requirement.strip()]

setuptools.setup(
    name="metric-kit",
    version="1.0.0",
    description="Metric spaces you can compute with: norms, p-adic numbers, spheres, graphs, functions and an axiom verifier",
    packages=setuptools.find_packages(exclude=['testing', 'testing.*']),
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    python_requires='>=3.7',
    install_requires=dependencies,
    extras_require={
        'testing': ['hypothesis'],
    },
    entry_points={
        'console_scripts': ['metrickit = metrickit.cli:main'],
    },
    package_data={'metrickit': ['defaults.yml']},
    include_package_data=True,
)

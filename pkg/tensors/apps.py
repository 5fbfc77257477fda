from django.apps import AppConfig


class TensorsConfig(AppConfig):
    name = "tensors"
    verbose_name = "P-tensor toolkit"

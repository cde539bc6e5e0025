import logging

from rest_framework import status
from rest_framework.response import Response
from rest_framework.views import APIView

from nullity_engine.classification import hausdorff_threshold, product_bounds
from nullity_engine.exceptions import NullityEngineError
from nullity_engine.services import ExperimentService, jsonable

from .serializers import (
    CapComparisonSerializer,
    CheeseConfigSerializer,
    ClassifySerializer,
    HausdorffThresholdSerializer,
    LevelSetConfigSerializer,
    ProductBoundsSerializer,
    ThresholdCurveSerializer,
)

logger = logging.getLogger(__name__)


class EngineView(APIView):
    """
    Base view: validates the input with ``serializer_class`` and hands the
    validated data to ``compute``.
    """

    serializer_class = None

    def compute(self, data):
        raise NotImplementedError

    def respond(self, payload):
        serializer = self.serializer_class(data=payload)
        if not serializer.is_valid():
            return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
        try:
            result = self.compute(serializer.validated_data)
        except NullityEngineError as e:
            return Response({"error": str(e)}, status=status.HTTP_400_BAD_REQUEST)
        except Exception as e:
            logger.exception(f"{type(self).__name__} failed: {e}")
            return Response({"error": "Internal error"}, status=status.HTTP_500_INTERNAL_SERVER_ERROR)
        return Response(jsonable(result))


class ClassifyView(EngineView):
    """
    API endpoint to classify one set at one (s, p)
    """

    serializer_class = ClassifySerializer

    def compute(self, data):
        return ExperimentService.classify(data['kind'], data)

    def post(self, request):
        return self.respond(request.data)


class HausdorffThresholdView(EngineView):
    """
    API endpoint returning (d - n)/p' for a measure-zero set of dimension d
    """

    serializer_class = HausdorffThresholdSerializer

    def compute(self, data):
        return {'threshold': hausdorff_threshold(data['d'], data['n'], data['p'])}

    def get(self, request):
        return self.respond(request.query_params.dict())


class ProductBoundsView(EngineView):
    """
    API endpoint for the bounds on the threshold of a Cartesian product
    """

    serializer_class = ProductBoundsSerializer

    def compute(self, data):
        bounds = product_bounds(data['s1'], data['s2'], data['n1'], data['n2'], data['p'],
                                data['positive_measure'])
        return bounds._asdict()

    def get(self, request):
        return self.respond(request.query_params.dict())


class CheeseCertificateView(EngineView):
    """
    API endpoint to evaluate the Swiss-cheese non-nullity certificate
    """

    serializer_class = CheeseConfigSerializer

    def compute(self, data):
        return ExperimentService.cheese(data, seed=data.get('seed'))

    def post(self, request):
        return self.respond(request.data)


class CapComparisonView(EngineView):
    """
    API endpoint comparing cap and Cap on (-a, a) at s = 2.

    The grid solves are slow, so they only run with ``include_grid=true``.
    """

    serializer_class = CapComparisonSerializer

    def compute(self, data):
        grid_config = {key: data[key] for key in ('L', 'N') if key in data}
        return ExperimentService.cap_comparison(data.get('epsilons'), data['include_grid'], grid_config)

    def get(self, request):
        payload = request.query_params.dict()
        if 'epsilons' in payload:
            payload['epsilons'] = [item for item in payload['epsilons'].split(',') if item]
        return self.respond(payload)


class ThresholdCurveView(EngineView):
    """
    API endpoint sampling r -> S(r) for a dimension or a Cantor family
    """

    serializer_class = ThresholdCurveSerializer

    def compute(self, data):
        return ExperimentService.threshold_curve(data)

    def post(self, request):
        return self.respond(request.data)


class LevelSetView(EngineView):
    """
    API endpoint returning the level-J prefractal of a Cantor spec
    """

    serializer_class = LevelSetConfigSerializer

    def compute(self, data):
        return ExperimentService.level_set(data)

    def post(self, request):
        return self.respond(request.data)

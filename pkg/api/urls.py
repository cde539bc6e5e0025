from django.urls import path

from . import views

urlpatterns = [
    path('classify/', views.ClassifyView.as_view(), name='classify'),
    path('hausdorff-threshold/', views.HausdorffThresholdView.as_view(), name='hausdorff-threshold'),
    path('product-bounds/', views.ProductBoundsView.as_view(), name='product-bounds'),
    path('cheese-certificate/', views.CheeseCertificateView.as_view(), name='cheese-certificate'),
    path('appendix-b/', views.CapComparisonView.as_view(), name='appendix-b'),
    path('cap-comparison/', views.CapComparisonView.as_view(), name='cap-comparison'),
    path('level-set/', views.LevelSetView.as_view(), name='level-set'),
    path('threshold-curve/', views.ThresholdCurveView.as_view(), name='threshold-curve'),
]
